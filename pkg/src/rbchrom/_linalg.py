"""Dense Gauss-Jordan over Fractions, for per-degree transition matrices."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def invert(matrix: Sequence[Sequence[Fraction | int]]) -> list[list[Fraction]]:
    n = len(matrix)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular transition matrix")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        if p != 1:
            a[col] = [x / p for x in a[col]]
        pivot_row = a[col]
        for r in range(n):
            f = a[r][col]
            if r != col and f != 0:
                row = a[r]
                a[r] = [x - f * y for x, y in zip(row, pivot_row)]
    return [row[n:] for row in a]


def rank(rows: Sequence[Sequence[Fraction | int]]) -> int:
    a = [[Fraction(x) for x in row] for row in rows]
    if not a:
        return 0
    ncols = len(a[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, len(a)):
            f = a[i][col] / a[r][col]
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == len(a):
            break
    return r
