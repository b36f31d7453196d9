"""Exact quasisymmetric and symmetric functions.

``QSymElement`` is a sparse map from subsets of ``[n-1]`` to Fractions in the
monomial (``M``) or fundamental (``F``) basis.  ``SymElement`` is a sparse map
from partitions of ``n`` to Fractions in one of the bases ``m, e, p, h, s``.
The canonical internal forms are ``M`` and ``m``; the other Sym bases are
reached through per-degree transition matrices that are built once and cached.

Products use the fact that a degree-d (quasi)symmetric function is determined
by its coefficients on monomials in d variables: the coefficient of
``x^gamma`` in ``f*g`` is the sum over ``v <= gamma`` of
``[x^v]f * [x^(gamma-v)]g``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Any, Callable, Iterable, Iterator, Mapping, Sequence

from . import _linalg
from .core import (
    PositionSubset,
    as_composition,
    as_partition,
    comp_to_set,
    compositions,
    conjugate,
    decode_composition,
    decode_partition,
    encode_partition,
    mult_factorial,
    partitions,
    set_to_comp,
)

Rational = Fraction | int


class NotSymmetricError(ValueError):
    """Raised when a quasisymmetric function is not symmetric.

    ``pair`` holds two rearrangement-equivalent compositions whose
    M-coefficients differ.
    """

    def __init__(self, pair: tuple[tuple[int, ...], tuple[int, ...]]):
        super().__init__(f"not symmetric: M{pair[0]} and M{pair[1]} have different coefficients")
        self.pair = pair


# --------------------------------------------------------------------------
# univariate polynomials


class UniPolynomial:
    """Dense polynomial in one variable ``m`` with Fraction coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Rational] = ()):
        c = [Fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(c)

    @classmethod
    def constant(cls, value: Rational) -> UniPolynomial:
        return cls([value])

    @classmethod
    def variable(cls) -> UniPolynomial:
        return cls([0, 1])

    @classmethod
    def binomial(cls, shift: int, k: int) -> UniPolynomial:
        """C(m + shift, k) as a polynomial in m."""
        out = cls([1])
        for j in range(k):
            out = out * cls([shift - j, 1])
        return out.scale(Fraction(1, factorial(k)))

    @classmethod
    def falling(cls, k: int) -> UniPolynomial:
        """m (m-1) ... (m-k+1)."""
        out = cls([1])
        for j in range(k):
            out = out * cls([-j, 1])
        return out

    @classmethod
    def rising(cls, k: int) -> UniPolynomial:
        """m (m+1) ... (m+k-1)."""
        out = cls([1])
        for j in range(k):
            out = out * cls([j, 1])
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: Rational) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: UniPolynomial) -> UniPolynomial:
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return UniPolynomial((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))

    def __neg__(self) -> UniPolynomial:
        return self.scale(-1)

    def __sub__(self, other: UniPolynomial) -> UniPolynomial:
        return self + (-other)

    def __mul__(self, other: UniPolynomial | Rational) -> UniPolynomial:
        if not isinstance(other, UniPolynomial):
            return self.scale(other)
        if not self.coeffs or not other.coeffs:
            return UniPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPolynomial(out)

    __rmul__ = __mul__

    def scale(self, c: Rational) -> UniPolynomial:
        return UniPolynomial(c * x for x in self.coeffs)

    def reflect(self) -> UniPolynomial:
        """p(-m)."""
        return UniPolynomial(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = UniPolynomial([other])
        return isinstance(other, UniPolynomial) and self.coeffs == other.coeffs

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"UniPolynomial({self})"

    def to_json(self) -> dict[str, Any]:
        return {"variable": "m", "coeffs": [str(c) for c in self.coeffs], "text": str(self)}

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> UniPolynomial:
        return cls(Fraction(c) for c in data["coeffs"])

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        out = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            mono = "" if i == 0 else ("m" if i == 1 else f"m^{i}")
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            out.append((sign, body))
        first_sign, first = out[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text


# --------------------------------------------------------------------------
# shared sparse-element machinery


def _frac(x: Any) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class _SparseElement:
    BASES: tuple[str, ...] = ()
    __slots__ = ("degree", "basis", "coeffs")

    def __init__(self, degree: int, basis: str, coeffs: Mapping[Any, Rational] | None = None):
        if basis not in self.BASES:
            raise ValueError(f"unknown basis {basis!r}; expected one of {self.BASES}")
        self.degree = int(degree)
        self.basis = basis
        out: dict[Any, Fraction] = {}
        for k, v in (coeffs or {}).items():
            key = self._norm_key(k)
            out[key] = out.get(key, Fraction(0)) + _frac(v)
        self.coeffs: dict[Any, Fraction] = {k: v for k, v in out.items() if v != 0}

    # subclasses supply these
    def _norm_key(self, key: Any) -> Any:  # pragma: no cover - abstract
        raise NotImplementedError

    def to(self, basis: str) -> _SparseElement:  # pragma: no cover - abstract
        raise NotImplementedError

    def _new(self, coeffs: Mapping[Any, Fraction], basis: str | None = None, degree: int | None = None):
        obj = object.__new__(type(self))
        obj.degree = self.degree if degree is None else degree
        obj.basis = basis or self.basis
        obj.coeffs = {k: v for k, v in coeffs.items() if v != 0}
        return obj

    def _aligned(self, other: _SparseElement) -> dict[Any, Fraction]:
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.degree != self.degree:
            if not other.coeffs:
                return {}
            if not self.coeffs:
                return dict(other.to(self.basis).coeffs)
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        return other.coeffs if other.basis == self.basis else other.to(self.basis).coeffs

    def __add__(self, other: _SparseElement):
        oc = self._aligned(other)
        out = dict(self.coeffs)
        for k, v in oc.items():
            out[k] = out.get(k, Fraction(0)) + v
        degree = self.degree if self.coeffs or not oc else other.degree
        return self._new(out, degree=degree)

    def __neg__(self):
        return self._new({k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other: _SparseElement):
        return self + (-other)

    def scale(self, c: Rational):
        c = _frac(c)
        return self._new({k: c * v for k, v in self.coeffs.items()})

    def __rmul__(self, c: Rational):
        return self.scale(c)

    def __getitem__(self, key: Any) -> Fraction:
        return self.coeffs.get(self._norm_key(key), Fraction(0))

    def items(self):
        return self.coeffs.items()

    def __len__(self) -> int:
        return len(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, _SparseElement):
            return not self.coeffs if other == 0 else NotImplemented
        if type(other) is not type(self):
            return NotImplemented
        if not self.coeffs and not other.coeffs:
            return True
        if self.degree != other.degree:
            return False
        if self.basis == other.basis:
            return self.coeffs == other.coeffs
        return self.coeffs == other.to(self.basis).coeffs

    __hash__ = None  # type: ignore[assignment]

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self.coeffs.values())

    def sorted_items(self) -> list[tuple[Any, Fraction]]:
        return sorted(self.coeffs.items(), key=lambda kv: self._sort_key(kv[0]))

    def _sort_key(self, key: Any) -> Any:
        return key

    def _encode_key(self, key: Any) -> str:  # pragma: no cover - abstract
        raise NotImplementedError

    def __repr__(self) -> str:
        if not self.coeffs:
            return f"{type(self).__name__}(0, degree={self.degree})"
        terms = " + ".join(f"{v}*{self.basis}[{self._encode_key(k)}]" for k, v in self.sorted_items())
        return f"{type(self).__name__}({terms})"

    def to_json(self) -> dict[str, Any]:
        return {
            "degree": self.degree,
            "basis": self.basis,
            "terms": [{"key": self._encode_key(k), "coeff": str(v)} for k, v in self.sorted_items()],
        }


# --------------------------------------------------------------------------
# QSym


def _compress(v: Iterable[int]) -> tuple[int, ...]:
    return tuple(x for x in v if x)


def _split_vectors(gamma: Sequence[int], total: int) -> Iterator[tuple[int, ...]]:
    """Vectors v with 0 <= v_i <= gamma_i and sum(v) == total."""
    k = len(gamma)
    suffix = [0] * (k + 1)
    for i in range(k - 1, -1, -1):
        suffix[i] = suffix[i + 1] + gamma[i]
    v = [0] * k

    def rec(i: int, rest: int) -> Iterator[tuple[int, ...]]:
        if i == k:
            if rest == 0:
                yield tuple(v)
            return
        lo = max(0, rest - suffix[i + 1])
        for x in range(lo, min(gamma[i], rest) + 1):
            v[i] = x
            yield from rec(i + 1, rest - x)

    yield from rec(0, total)


class QSymElement(_SparseElement):
    """Quasisymmetric function of homogeneous degree ``degree``.

    Keys are frozensets ``I`` of ``[degree-1]``.  Constructor keys may also be
    :class:`PositionSubset` values or composition tuples.
    """

    BASES = ("M", "F")
    __slots__ = ()

    def _norm_key(self, key: Any) -> frozenset[int]:
        if isinstance(key, PositionSubset):
            if key.ambient != self.degree and self.degree:
                raise ValueError(f"subset ambient {key.ambient} differs from degree {self.degree}")
            return key.elements
        if isinstance(key, (tuple, list)):
            alpha = as_composition(key)
            if sum(alpha) != self.degree:
                raise ValueError(f"composition {alpha} is not of weight {self.degree}")
            return comp_to_set(alpha).elements
        s = frozenset(int(x) for x in key)
        if any(not 1 <= x <= self.degree - 1 for x in s):
            raise ValueError(f"subset {sorted(s)} not inside [1, {self.degree - 1}]")
        return s

    def _sort_key(self, key: frozenset[int]) -> Any:
        return tuple(sorted(key))

    def _encode_key(self, key: frozenset[int]) -> str:
        return PositionSubset(key, self.degree).encode()

    def composition_items(self) -> list[tuple[tuple[int, ...], Fraction]]:
        return sorted((set_to_comp(PositionSubset(k, self.degree)), v) for k, v in self.coeffs.items())

    def to(self, basis: str) -> QSymElement:
        return qsym_convert(self, basis)

    def __mul__(self, other: Any) -> QSymElement:
        if isinstance(other, QSymElement):
            return multiply(self, other)
        return self.scale(other)

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> QSymElement:
        degree = int(data["degree"])
        coeffs: dict[Any, Fraction] = {}
        for t in data["terms"]:
            key = t["key"].strip()
            if key.startswith("{"):
                k: Any = PositionSubset.decode(key)
            else:
                k = decode_composition(key)
            coeffs[k] = coeffs.get(k, 0) + Fraction(t["coeff"])
        return cls(degree, data["basis"], coeffs)


def _supersets(base: frozenset[int], n: int) -> Iterator[frozenset[int]]:
    rest = [i for i in range(1, n) if i not in base]
    for r in range(len(rest) + 1):
        for extra in itertools.combinations(rest, r):
            yield base | frozenset(extra)


def qsym_convert(f: QSymElement, basis: str) -> QSymElement:
    """Convert between the M and F bases (F_I = sum over J containing I of M_J)."""
    if basis not in QSymElement.BASES:
        raise ValueError(f"unknown QSym basis {basis!r}")
    if basis == f.basis:
        return f
    n = f.degree
    out: dict[frozenset[int], Fraction] = {}
    for key, c in f.coeffs.items():
        for sup in _supersets(key, n):
            sign = 1 if basis == "M" or (len(sup) - len(key)) % 2 == 0 else -1
            out[sup] = out.get(sup, Fraction(0)) + sign * c
    return f._new(out, basis=basis)


def omega_qsym(f: QSymElement) -> QSymElement:
    """omega(F_I) = F_{I^c}; result is returned in the F basis."""
    g = qsym_convert(f, "F")
    full = frozenset(range(1, f.degree))
    return g._new({full - k: v for k, v in g.coeffs.items()})


def _qsym_mul(f: QSymElement, g: QSymElement) -> QSymElement:
    fm, gm = qsym_convert(f, "M"), qsym_convert(g, "M")
    a, b = f.degree, g.degree
    fc = {set_to_comp(PositionSubset(k, a)): v for k, v in fm.coeffs.items()}
    gc = {set_to_comp(PositionSubset(k, b)): v for k, v in gm.coeffs.items()}
    out: dict[frozenset[int], Fraction] = {}
    for gamma in compositions(a + b):
        acc = Fraction(0)
        for v in _split_vectors(gamma, a):
            x = fc.get(_compress(v))
            if x:
                y = gc.get(_compress(w - u for w, u in zip(gamma, v)))
                if y:
                    acc += x * y
        if acc:
            out[comp_to_set(gamma).elements] = acc
    return fm._new(out, basis="M", degree=a + b)


# --------------------------------------------------------------------------
# Sym


class SymElement(_SparseElement):
    """Symmetric function of homogeneous degree ``degree``; keys are partitions."""

    BASES = ("m", "e", "p", "h", "s")
    __slots__ = ()

    def _norm_key(self, key: Any) -> tuple[int, ...]:
        if isinstance(key, str):
            lam = decode_partition(key)
        elif isinstance(key, int):
            lam = as_partition([key])
        else:
            lam = as_partition(key)
        if sum(lam) != self.degree:
            raise ValueError(f"partition {lam} is not of weight {self.degree}")
        return lam

    def _encode_key(self, key: tuple[int, ...]) -> str:
        return encode_partition(key)

    def to(self, basis: str) -> SymElement:
        return sym_convert(self, basis)

    def __mul__(self, other: Any) -> SymElement:
        if isinstance(other, SymElement):
            return multiply(self, other)
        return self.scale(other)

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> SymElement:
        coeffs: dict[Any, Fraction] = {}
        for t in data["terms"]:
            k = decode_partition(t["key"])
            coeffs[k] = coeffs.get(k, 0) + Fraction(t["coeff"])
        return cls(int(data["degree"]), data["basis"], coeffs)


def basis_element(basis: str, key: Sequence[int] | int) -> SymElement:
    """The single basis function ``basis[key]``, e.g. ``basis_element('p', (2, 1))``."""
    lam = as_partition([key] if isinstance(key, int) else key)
    return SymElement(sum(lam), basis, {lam: 1})


def _mul_m(f: Mapping[tuple[int, ...], Fraction], a: int,
           g: Mapping[tuple[int, ...], Fraction], b: int) -> dict[tuple[int, ...], Fraction]:
    """Product of two m-expansions, by coefficient extraction in a+b variables."""
    out: dict[tuple[int, ...], Fraction] = {}
    if not f or not g:
        return out
    for mu in partitions(a + b):
        acc = Fraction(0)
        for v in _split_vectors(mu, a):
            x = f.get(tuple(sorted(_compress(v), reverse=True)))
            if x:
                y = g.get(tuple(sorted(_compress(w - u for w, u in zip(mu, v)), reverse=True)))
                if y:
                    acc += x * y
        if acc:
            out[mu] = acc
    return out


@lru_cache(maxsize=None)
def _single_in_m(basis: str, k: int) -> tuple[tuple[tuple[int, ...], Fraction], ...]:
    if basis == "e":
        return (((1,) * k, Fraction(1)),)
    if basis == "p":
        return (((k,), Fraction(1)),)
    if basis == "h":
        return tuple((mu, Fraction(1)) for mu in partitions(k))
    raise ValueError(basis)


def _product_in_m(basis: str, lam: tuple[int, ...]) -> dict[tuple[int, ...], Fraction]:
    acc: dict[tuple[int, ...], Fraction] = {(): Fraction(1)}
    deg = 0
    for part in lam:
        acc = _mul_m(acc, deg, dict(_single_in_m(basis, part)), part)
        deg += part
    return acc


def _signed_permutations(k: int) -> Iterator[tuple[tuple[int, ...], int]]:
    for perm in itertools.permutations(range(k)):
        inversions = sum(1 for i in range(k) for j in range(i + 1, k) if perm[i] > perm[j])
        yield perm, -1 if inversions % 2 else 1


def schur_in_h(lam: Sequence[int]) -> dict[tuple[int, ...], Fraction]:
    """Jacobi-Trudi: s_lambda = det(h_{lambda_i - i + j}) expanded in the h basis."""
    lam = tuple(lam)
    k = len(lam)
    out: dict[tuple[int, ...], Fraction] = {}
    for perm, sign in _signed_permutations(k):
        idx = [lam[i] - i + perm[i] for i in range(k)]
        if any(x < 0 for x in idx):
            continue
        key = tuple(sorted((x for x in idx if x), reverse=True))
        out[key] = out.get(key, Fraction(0)) + sign
    return {kk: v for kk, v in out.items() if v}


@lru_cache(maxsize=None)
def _to_m_table(basis: str, n: int) -> dict[tuple[int, ...], dict[tuple[int, ...], Fraction]]:
    """basis[lambda] expanded in m, for every lambda of n."""
    if basis == "m":
        return {lam: {lam: Fraction(1)} for lam in partitions(n)}
    if basis in ("e", "p", "h"):
        return {lam: _product_in_m(basis, lam) for lam in partitions(n)}
    if basis == "s":
        h_tab = _to_m_table("h", n)
        table = {}
        for lam in partitions(n):
            acc: dict[tuple[int, ...], Fraction] = {}
            for mu, c in schur_in_h(lam).items():
                for nu, d in h_tab[mu].items():
                    acc[nu] = acc.get(nu, Fraction(0)) + c * d
            table[lam] = {k: v for k, v in acc.items() if v}
        return table
    raise ValueError(f"unknown Sym basis {basis!r}")


@lru_cache(maxsize=None)
def _from_m_table(basis: str, n: int) -> dict[tuple[int, ...], dict[tuple[int, ...], Fraction]]:
    """m[mu] expanded in ``basis``, from the inverse of the transition matrix."""
    keys = partitions(n)
    fwd = _to_m_table(basis, n)
    mat = [[fwd[lam].get(mu, Fraction(0)) for mu in keys] for lam in keys]
    inv = _linalg.invert(mat)
    # row vector c (m-coords) = a (basis coords) * mat  =>  a = c * inv
    return {mu: {lam: inv[i][j] for j, lam in enumerate(keys) if inv[i][j]} for i, mu in enumerate(keys)}


def transition_matrix(source: str, target: str, n: int) -> tuple[tuple[tuple[int, ...], ...], list[list[Fraction]]]:
    """Matrix whose row lambda is source[lambda] expanded in target; rows/cols ordered by ``partitions(n)``."""
    keys = partitions(n)
    rows = []
    for lam in keys:
        f = SymElement(n, source, {lam: 1}).to(target)
        rows.append([f[mu] for mu in keys])
    return keys, rows


def _apply_table(coeffs: Mapping[tuple[int, ...], Fraction],
                 table: Mapping[tuple[int, ...], Mapping[tuple[int, ...], Fraction]]) -> dict[tuple[int, ...], Fraction]:
    out: dict[tuple[int, ...], Fraction] = {}
    for k, c in coeffs.items():
        for kk, d in table[k].items():
            out[kk] = out.get(kk, Fraction(0)) + c * d
    return out


def sym_to_m(f: SymElement) -> SymElement:
    if f.basis == "m":
        return f
    return f._new(_apply_table(f.coeffs, _to_m_table(f.basis, f.degree)), basis="m")


def m_to_basis(f: SymElement, basis: str) -> SymElement:
    if f.basis != "m":
        raise ValueError("m_to_basis expects an m-basis element")
    if basis == "m":
        return f
    return f._new(_apply_table(f.coeffs, _from_m_table(basis, f.degree)), basis=basis)


def sym_convert(f: SymElement, basis: str) -> SymElement:
    if basis not in SymElement.BASES:
        raise ValueError(f"unknown Sym basis {basis!r}")
    if basis == f.basis:
        return f
    return m_to_basis(sym_to_m(f), basis)


def omega_sym(f: SymElement) -> SymElement:
    """The involution omega, applied in the element's own basis.

    e and h swap (so the result is in the other of the two bases), p picks up
    the sign (-1)^(|lambda| - l(lambda)), s conjugates, m goes through p.
    """
    if f.basis == "e":
        return f._new(f.coeffs, basis="h")
    if f.basis == "h":
        return f._new(f.coeffs, basis="e")
    if f.basis == "p":
        return f._new({k: v if (sum(k) - len(k)) % 2 == 0 else -v for k, v in f.coeffs.items()})
    if f.basis == "s":
        return f._new({conjugate(k): v for k, v in f.coeffs.items()})
    return omega_sym(f.to("p")).to("m")


def multiply(f: _SparseElement, g: _SparseElement) -> Any:
    """Product of two Sym elements (result in m) or two QSym elements (result in M)."""
    if isinstance(f, SymElement) and isinstance(g, SymElement):
        fm, gm = sym_to_m(f), sym_to_m(g)
        return fm._new(_mul_m(fm.coeffs, f.degree, gm.coeffs, g.degree), basis="m", degree=f.degree + g.degree)
    if isinstance(f, QSymElement) and isinstance(g, QSymElement):
        return _qsym_mul(f, g)
    raise TypeError("multiply needs two SymElements or two QSymElements")


# --------------------------------------------------------------------------
# Sym inside QSym, principal specialization, positivity


def rearrangements(lam: Sequence[int]) -> list[tuple[int, ...]]:
    return sorted(set(itertools.permutations(lam)))


def embed_sym_in_qsym(f: SymElement) -> QSymElement:
    """m_lambda = sum of M_alpha over the rearrangements alpha of lambda."""
    fm = sym_to_m(f)
    out: dict[frozenset[int], Fraction] = {}
    for lam, c in fm.coeffs.items():
        for alpha in rearrangements(lam):
            out[comp_to_set(alpha).elements] = c
    return QSymElement(f.degree, "M", out)


def project_qsym_to_sym(f: QSymElement) -> SymElement:
    """Inverse of :func:`embed_sym_in_qsym`; raises NotSymmetricError if ``f`` is not symmetric."""
    fm = qsym_convert(f, "M")
    n = f.degree
    by_comp = {set_to_comp(PositionSubset(k, n)): v for k, v in fm.coeffs.items()}
    out: dict[tuple[int, ...], Fraction] = {}
    for alpha in sorted(by_comp):
        lam = tuple(sorted(alpha, reverse=True))
        if lam in out:
            continue
        c = by_comp[alpha]
        for beta in rearrangements(lam):
            if by_comp.get(beta, Fraction(0)) != c:
                raise NotSymmetricError((alpha, beta))
        out[lam] = c
    return SymElement(n, "m", out)


@lru_cache(maxsize=None)
def _binomial_poly(shift: int, k: int) -> UniPolynomial:
    return UniPolynomial.binomial(shift, k)


def _combine(weights: Mapping[tuple[int, int], Fraction]) -> UniPolynomial:
    acc: list[Fraction] = []
    for (shift, k), c in weights.items():
        if c:
            poly = _binomial_poly(shift, k).coeffs
            if len(poly) > len(acc):
                acc.extend([Fraction(0)] * (len(poly) - len(acc)))
            for i, a in enumerate(poly):
                acc[i] += c * a
    return UniPolynomial(acc)


def principal_specialization(f: QSymElement | SymElement) -> UniPolynomial:
    """ps1(f)(m) = f(1, ..., 1, 0, ...) with m ones, as a polynomial in m."""
    weights: dict[tuple[int, int], Fraction] = {}
    if isinstance(f, SymElement):
        for lam, c in sym_to_m(f).coeffs.items():
            key = (0, len(lam))
            weights[key] = weights.get(key, 0) + c * (factorial(len(lam)) // mult_factorial(lam))
        return _combine(weights)
    n = f.degree
    for sub, c in f.coeffs.items():
        if f.basis == "M":
            key = (0, len(sub) + 1 if n else 0)
        else:
            key = (n - 1 - len(sub), n)
        weights[key] = weights.get(key, 0) + c
    return _combine(weights)


@dataclass(frozen=True)
class Positivity:
    """Outcome of a positivity test.  ``certificate`` is the first negative key."""

    positive: bool
    basis: str
    certificate: Any = None
    coeff: Fraction | None = None

    def __bool__(self) -> bool:
        return self.positive


def positivity(f: _SparseElement, basis: str) -> Positivity:
    g = f.to(basis)
    for key, c in g.sorted_items():
        if c < 0:
            return Positivity(False, basis, key, c)
    return Positivity(True, basis)


def sym_from_function(n: int, basis: str, fn: Callable[[tuple[int, ...]], Rational]) -> SymElement:
    """Build an element by evaluating ``fn`` on every partition of n."""
    return SymElement(n, basis, {lam: fn(lam) for lam in partitions(n)})
