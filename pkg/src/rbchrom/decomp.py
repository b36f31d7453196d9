"""Linear breakdown of Redei-Berge functions into bags of sticks.

Edge subsets are handled as bitmasks over the sorted arc list of the host
digraph.  A subset is "non-bag" when (V, S) is not a disjoint union of
directed paths; non-bag sets are closed upwards, and the edge poset puts
A below B when A is a proper subset of a non-bag B.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Any, Iterable, Sequence

from ._linalg import rank
from .core import as_partition, is_finer, mult_factorial, partitions
from .invariants import IdentityCheck, Y_chromatic, chromatic_sym, compare, descent_histogram, redei_berge
from .structures import (
    Digraph,
    Graph,
    Poset,
    add_edges,
    bag_of_sticks,
    bag_type,
    digraph_of,
    inc,
    path_covers,
    path_cycle_covers,
)
from .symfn import QSymElement, SymElement, UniPolynomial, omega_sym, project_qsym_to_sym

Arc = tuple[int, int]


class BagInputError(ValueError):
    """The digraph is already a bag of sticks."""


class _EdgeLattice:
    """Bag / non-bag status and the xi recursion over all arc subsets."""

    def __init__(self, X: Digraph):
        self.X = X
        self.arcs = sorted(X.arcs)
        self.m = len(self.arcs)
        self.full = (1 << self.m) - 1
        self.types: list[tuple[int, ...] | None] = [
            bag_type(X.n, self.subset(mask)) for mask in range(1 << self.m)
        ]
        self._g: dict[int, int] = {}

    def subset(self, mask: int) -> frozenset[Arc]:
        return frozenset(a for k, a in enumerate(self.arcs) if mask >> k & 1)

    def mask(self, S: Iterable[Arc]) -> int:
        index = {a: k for k, a in enumerate(self.arcs)}
        out = 0
        for a in S:
            a = tuple(a)
            if a not in index:
                raise ValueError(f"{a} is not an arc of the digraph")
            out |= 1 << index[a]
        return out

    def nonbag(self, mask: int) -> bool:
        return self.types[mask] is None

    def g(self, mask: int) -> int:
        """xi([A, E]) via g(E) = 1, g(A) = -sum g(B) over non-bag B properly containing A."""
        if mask in self._g:
            return self._g[mask]
        if mask == self.full:
            return 1
        # fill the table from the top down so each superset is ready when needed
        order = sorted(range(1 << self.m), key=lambda s: -bin(s).count("1"))
        for A in order:
            if A in self._g:
                continue
            if A == self.full:
                self._g[A] = 1
                continue
            free = self.full & ~A
            total = 0
            sub = free
            while sub:
                B = A | sub
                if self.types[B] is None:
                    total += self._g[B]
                sub = (sub - 1) & free
            self._g[A] = -total
        return self._g[mask]


@lru_cache(maxsize=4096)
def _lattice(X: Digraph) -> _EdgeLattice:
    return _EdgeLattice(X)


def _require_nonbag(X: Digraph) -> _EdgeLattice:
    lat = _lattice(X)
    if not lat.nonbag(lat.full):
        raise BagInputError("the digraph is a bag of sticks; its breakdown is itself")
    return lat


def xi(S: Iterable[Arc], X: Digraph) -> int:
    """xi([S, E]): signed count of chains from S to E in the edge poset."""
    lat = _require_nonbag(X)
    return lat.g(lat.mask(S))


def xi_by_chains(S: Iterable[Arc], X: Digraph) -> int:
    """Slow oracle: enumerate every chain S < S_1 < ... < E explicitly."""
    lat = _require_nonbag(X)
    start = lat.mask(S)

    def chains(A: int) -> Iterable[int]:
        if A == lat.full:
            yield 0
            return
        free = lat.full & ~A
        sub = free
        while sub:
            B = A | sub
            if lat.nonbag(B):
                for length in chains(B):
                    yield length + 1
            sub = (sub - 1) & free

    return sum((-1) ** length for length in chains(start))


@dataclass(frozen=True)
class BreakdownTerm:
    edges: frozenset[Arc]
    shape: tuple[int, ...]
    coeff: int


@dataclass
class BreakdownResult:
    """U_X (and W_X) as an integer combination of bags of sticks P_lambda(S)."""

    digraph: Digraph
    terms: list[BreakdownTerm] = field(default_factory=list)

    def grouped(self) -> dict[tuple[int, ...], int]:
        out: dict[tuple[int, ...], int] = {}
        for t in self.terms:
            out[t.shape] = out.get(t.shape, 0) + t.coeff
        return {lam: c for lam, c in sorted(out.items()) if c}

    def reassemble_quasisym(self) -> QSymElement:
        acc = QSymElement(self.digraph.n, "F")
        for lam, c in self.grouped().items():
            acc = acc + c * bag_redei_berge(lam)
        return acc

    def reassemble(self) -> SymElement:
        return project_qsym_to_sym(self.reassemble_quasisym())

    def to_json(self) -> dict[str, Any]:
        return {
            "digraph": self.digraph.to_json(),
            "terms": [
                {"edges": [list(a) for a in sorted(t.edges)], "shape": list(t.shape), "coeff": t.coeff}
                for t in self.terms
            ],
            "grouped": [{"shape": list(lam), "coeff": c} for lam, c in self.grouped().items()],
        }


def linear_breakdown(X: Digraph) -> BreakdownResult:
    """Every S with (V, S) a bag of sticks, with coefficient (-1)^{|E|-|S|} xi([S, E])."""
    lat = _require_nonbag(X)
    terms = []
    for mask in range(1 << lat.m):
        lam = lat.types[mask]
        if lam is None:
            continue
        k = bin(mask).count("1")
        terms.append(BreakdownTerm(lat.subset(mask), lam, (-1) ** (lat.m - k) * lat.g(mask)))
    return BreakdownResult(X, terms)


def breakdown_by_deletion(X: Digraph, first: Iterable[Arc] | None = None) -> dict[frozenset[Arc], int]:
    """Oracle: W_X = sum over nonempty S in F of (-1)^{|S|-1} W_{X minus S}, applied until
    every leaf is a bag of sticks.  ``first`` sets F for the top step (default E);
    deeper steps always use the full remaining arc set.
    """
    lat = _require_nonbag(X)
    memo: dict[int, dict[int, int]] = {}

    def expand(A: int, F: int) -> dict[int, int]:
        out: dict[int, int] = {}
        sub = F
        while sub:
            for leaf, c in rec(A & ~sub).items():
                out[leaf] = out.get(leaf, 0) + (-1) ** (bin(sub).count("1") - 1) * c
            sub = (sub - 1) & F
        return out

    def rec(A: int) -> dict[int, int]:
        if not lat.nonbag(A):
            return {A: 1}
        if A not in memo:
            memo[A] = expand(A, A)
        return memo[A]

    if first is None:
        top = rec(lat.full)
    else:
        F = lat.mask(first)
        if not lat.nonbag(F):
            raise ValueError("F must itself span a non-bag")
        top = expand(lat.full, F)
    return {lat.subset(k): c for k, c in top.items() if c}


def bag_coefficient(X: Digraph, lam: Sequence[int]) -> int:
    """[U_{P_lam}] U_X = (-1)^{|E| + l(lam) - |V|} sum of xi([S, E]) over bags S of type lam."""
    lat = _require_nonbag(X)
    lam = as_partition(lam)
    total = sum(lat.g(mask) for mask in range(1 << lat.m) if lat.types[mask] == lam)
    return (-1) ** (lat.m + len(lam) - X.n) * total


@lru_cache(maxsize=None)
def bag_redei_berge(lam: tuple[int, ...]) -> QSymElement:
    return redei_berge(bag_of_sticks(lam))


# --------------------------------------------------------------------------
# bags of sticks: counting formulas


def N_count(lam: Sequence[int], mu: Sequence[int]) -> int:
    """Orderings of the parts of mu (equal parts distinct) that refine lam."""
    lam, mu = as_partition(lam), as_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"weights differ: |{lam}| != |{mu}|")
    return sum(1 for tau in itertools.permutations(mu) if is_finer(tau, lam))


def omega_U_bag(lam: Sequence[int]) -> SymElement:
    """omega(U_{P_lam}) = sum over mu of N(lam, mu) m_mu."""
    lam = as_partition(lam)
    n = sum(lam)
    return SymElement(n, "m", {mu: N_count(lam, mu) for mu in partitions(n)})


def path_cover_counts(X: Digraph) -> dict[tuple[int, ...], int]:
    """n_mu(X): number of path covers of stick type mu."""
    out: dict[tuple[int, ...], int] = {}
    for _, mu in path_covers(X):
        out[mu] = out.get(mu, 0) + 1
    return out


def _require_loopless(X: Digraph) -> None:
    if X.has_loops():
        raise ValueError("defined for loopless digraphs only")


def path_cycle_x0(X: Digraph) -> SymElement:
    """Xi_X(x, 0) = sum of n_mu(X) * r_1! r_2! ... * m_mu."""
    _require_loopless(X)
    return SymElement(X.n, "m", {mu: c * mult_factorial(mu) for mu, c in path_cover_counts(X).items()})


def cover_polynomial(X: Digraph) -> dict[tuple[int, int], int]:
    """C_X(m, n) as {(i, j): coeff} for the monomial m^i n^j."""
    _require_loopless(X)
    out: dict[tuple[int, int], int] = {}
    for _, paths, cycles in path_cycle_covers(X):
        fall = UniPolynomial.falling(len(paths))
        for i, c in enumerate(fall.coeffs):
            if c:
                key = (i, len(cycles))
                out[key] = out.get(key, 0) + int(c)
    return {k: v for k, v in sorted(out.items()) if v}


def cover_at_zero(X: Digraph) -> UniPolynomial:
    """C_X(m, 0): covers without cycles, weighted by m(m-1)...(m - #paths + 1)."""
    return UniPolynomial(
        [cover_polynomial(X).get((i, 0), 0) for i in range(X.n + 1)]
    )


def u_from_path_covers(X: Digraph) -> UniPolynomial:
    """u_X(m) = sum_i (-1)^{|V|-i} n_i(X) m(m+1)...(m+i-1), n_i = covers with i paths."""
    _require_loopless(X)
    acc = UniPolynomial()
    for mu, c in path_cover_counts(X).items():
        i = len(mu)
        acc = acc + UniPolynomial.rising(i).scale((-1) ** (X.n - i) * c)
    return acc


def u_bag_closed_form(lam: Sequence[int]) -> UniPolynomial:
    """sum_{i=l}^{n} (-1)^{n-i} C(n-l, i-l) m(m+1)...(m+i-1), n = |lam|, l = l(lam)."""
    lam = as_partition(lam)
    n, l = sum(lam), len(lam)
    acc = UniPolynomial()
    for i in range(l, n + 1):
        acc = acc + UniPolynomial.rising(i).scale((-1) ** (n - i) * comb(n - l, i - l))
    return acc


def stable_partition_count_from_breakdown(P: Poset, mu: Sequence[int]) -> Fraction:
    """(1 / r_1! r_2! ...) sum over bags S of (-1)^{|E|-|S|} xi([S,E]) N(lambda(S), mu)."""
    X = digraph_of(P)
    mu = as_partition(mu)
    lat = _lattice(X)
    if not lat.nonbag(lat.full):
        lam = lat.types[lat.full]
        return Fraction(N_count(lam, mu), mult_factorial(mu))
    total = sum(t.coeff * N_count(t.shape, mu) for t in linear_breakdown(X).terms)
    return Fraction(total, mult_factorial(mu))


# --------------------------------------------------------------------------
# generalized triple deletion


@dataclass(frozen=True)
class TripleDeletionReport:
    nc_level: IdentityCheck
    sym_level: IdentityCheck
    empty_set_variant_balances: bool
    classical: IdentityCheck | None

    @property
    def holds(self) -> bool:
        ok = self.nc_level.holds and self.sym_level.holds
        return ok and (self.classical is None or self.classical.holds)


def generalized_triple_deletion(P: Poset, v: int, us: Sequence[int]) -> TripleDeletionReport:
    """Y_{inc(P)} = sum over nonempty S in F of (-1)^{|S|-1} Y_{inc(P) + S}, F = {{u_i, v}}.

    Also evaluated with the empty set included in the sum (reported, not
    asserted), and for k = 2 against X_G = X_{G-e1} + X_{G-e2} - X_{G-e1-e2}
    on G = inc(P) + e1 + e2.
    """
    us = list(us)
    if len(us) < 2 or len(set(us)) != len(us):
        raise ValueError("need at least two distinct covered elements")
    for u in us:
        if not P.is_covering(u, v):
            raise ValueError(f"{v} does not cover {u}")
    G = inc(P)
    F = [(min(u, v), max(u, v)) for u in us]
    nc_rhs = None
    sym_rhs = None
    for r in range(1, len(F) + 1):
        for S in itertools.combinations(F, r):
            H = add_edges(G, S)
            sign = (-1) ** (r - 1)
            y = sign * Y_chromatic(H)
            x = sign * chromatic_sym(H)
            nc_rhs = y if nc_rhs is None else nc_rhs + y
            sym_rhs = x if sym_rhs is None else sym_rhs + x
    nc = compare(Y_chromatic(G), nc_rhs)
    sym = compare(chromatic_sym(G), sym_rhs)
    with_empty = nc_rhs - Y_chromatic(G)
    balances = with_empty == Y_chromatic(G)
    classical = None
    if len(F) == 2:
        H = add_edges(G, F)
        e1, e2 = F
        rhs = (chromatic_sym(_delete(H, [e1])) + chromatic_sym(_delete(H, [e2]))
               - chromatic_sym(_delete(H, [e1, e2])))
        classical = compare(chromatic_sym(H), rhs)
    return TripleDeletionReport(nc, sym, balances, classical)


def _delete(G: Graph, edges: Sequence[Arc]) -> Graph:
    return Graph(G.n, G.edges - set(edges))


# --------------------------------------------------------------------------
# misc cross-checks used by the verification suites


def omega_U_direct(X: Digraph) -> SymElement:
    return omega_sym(project_qsym_to_sym(QSymElement(X.n, "F", descent_histogram(X))))


def bag_rank(n: int) -> int:
    """Rank of {U_{P_lam} : lam |- n} over the rationals, in the monomial basis."""
    keys = partitions(n)
    rows = []
    for lam in keys:
        u = project_qsym_to_sym(bag_redei_berge(lam))
        rows.append([u[mu] for mu in keys])
    return rank(rows)
