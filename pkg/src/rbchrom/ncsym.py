"""Symmetric functions in noncommuting variables (NCSym).

Elements are sparse maps from set partitions of ``[n]`` to Fractions in the
``m``, ``e``, ``p`` or ``h`` basis.  Conversions:

* ``p_pi = sum_{sigma >= pi} m_sigma``
* ``h_pi = sum_sigma (sigma meet pi)! m_sigma``
* ``e_pi = sum_{sigma meet pi = 0} m_sigma``
* ``m -> p`` by Moebius inversion on the partition lattice,
  ``p <-> h`` through ``h_pi = sum_{sigma <= pi} |mu(0, sigma)| p_sigma`` and
  its inverse, ``m -> e`` through a cached inverse matrix.

omega and the induction map act natively on ``p`` and are routed through it
for the other bases.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Any, Iterable, Mapping, Sequence

from . import _linalg
from .core import (
    SetPartition,
    abs_mobius_bottom,
    compositions,
    leq,
    meet,
    mobius,
    pi_plus,
    pi_slash,
    pi_statistics,
    set_partitions,
)
from .symfn import SymElement, _SparseElement

Key = SetPartition


class NCSymElement(_SparseElement):
    """Homogeneous element of NCSym; keys are set partitions of ``[degree]``."""

    BASES = ("m", "e", "p", "h")
    __slots__ = ()

    def _norm_key(self, key: Any) -> SetPartition:
        if isinstance(key, str):
            key = SetPartition.decode(key)
        elif not isinstance(key, SetPartition):
            key = SetPartition(key)
        if key.n != self.degree:
            raise ValueError(f"set partition {key.encode()} is not of [{self.degree}]")
        return key

    def _sort_key(self, key: SetPartition) -> Any:
        return key.rgs()

    def _encode_key(self, key: SetPartition) -> str:
        return key.encode()

    def to(self, basis: str) -> NCSymElement:
        return ncsym_convert(self, basis)

    def __mul__(self, other: Any) -> NCSymElement:
        if isinstance(other, NCSymElement):
            return ncsym_multiply(self, other)
        return self.scale(other)

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> NCSymElement:
        coeffs: dict[SetPartition, Fraction] = {}
        for t in data["terms"]:
            k = SetPartition.decode(t["key"])
            coeffs[k] = coeffs.get(k, Fraction(0)) + Fraction(t["coeff"])
        return cls(int(data["degree"]), data["basis"], coeffs)


def nc_basis_element(basis: str, pi: SetPartition | str | Iterable[Iterable[int]]) -> NCSymElement:
    if isinstance(pi, str):
        pi = SetPartition.decode(pi)
    elif not isinstance(pi, SetPartition):
        pi = SetPartition(pi)
    return NCSymElement(pi.n, basis, {pi: 1})


def unit() -> NCSymElement:
    """The degree-0 unit, indexed by the empty set partition."""
    return NCSymElement(0, "m", {SetPartition(()): 1})


# --------------------------------------------------------------------------
# transition tables


@lru_cache(maxsize=None)
def _leq_pairs(n: int) -> dict[SetPartition, tuple[SetPartition, ...]]:
    """For every pi in Pi_n, the partitions sigma >= pi."""
    parts = set_partitions(n)
    return {pi: tuple(s for s in parts if leq(pi, s)) for pi in parts}


@lru_cache(maxsize=None)
def _below(n: int) -> dict[SetPartition, tuple[SetPartition, ...]]:
    """For every pi in Pi_n, the partitions sigma <= pi."""
    parts = set_partitions(n)
    return {pi: tuple(s for s in parts if leq(s, pi)) for pi in parts}


Table = dict[SetPartition, dict[SetPartition, Fraction]]


@lru_cache(maxsize=None)
def _to_m_table(basis: str, n: int) -> Table:
    parts = set_partitions(n)
    if basis == "m":
        return {pi: {pi: Fraction(1)} for pi in parts}
    if basis == "p":
        return {pi: {s: Fraction(1) for s in _leq_pairs(n)[pi]} for pi in parts}
    if basis == "h":
        return {pi: {s: Fraction(pi_statistics(meet(s, pi))[2]) for s in parts} for pi in parts}
    if basis == "e":
        bottom = SetPartition.discrete(n)
        return {pi: {s: Fraction(1) for s in parts if meet(s, pi) == bottom} for pi in parts}
    raise ValueError(f"unknown NCSym basis {basis!r}")


@lru_cache(maxsize=None)
def _m_to_p_table(n: int) -> Table:
    """m_pi = sum_{sigma >= pi} mu(pi, sigma) p_sigma."""
    return {pi: {s: Fraction(mobius(pi, s)) for s in _leq_pairs(n)[pi]} for pi in set_partitions(n)}


@lru_cache(maxsize=None)
def _p_to_h_table(n: int) -> Table:
    """p_pi = (1/|mu(0, pi)|) sum_{sigma <= pi} mu(sigma, pi) h_sigma."""
    out: Table = {}
    for pi in set_partitions(n):
        scale = Fraction(1, abs_mobius_bottom(pi))
        out[pi] = {s: scale * mobius(s, pi) for s in _below(n)[pi]}
    return out


@lru_cache(maxsize=None)
def _h_to_p_table(n: int) -> Table:
    """h_pi = sum_{sigma <= pi} |mu(0, sigma)| p_sigma."""
    return {pi: {s: Fraction(abs_mobius_bottom(s)) for s in _below(n)[pi]} for pi in set_partitions(n)}


@lru_cache(maxsize=None)
def _m_to_e_table(n: int) -> Table:
    keys = set_partitions(n)
    fwd = _to_m_table("e", n)
    mat = [[fwd[pi].get(s, Fraction(0)) for s in keys] for pi in keys]
    inv = _linalg.invert(mat)
    return {s: {pi: inv[i][j] for j, pi in enumerate(keys) if inv[i][j]} for i, s in enumerate(keys)}


def _apply(coeffs: Mapping[SetPartition, Fraction], table: Mapping[SetPartition, Mapping[SetPartition, Fraction]]) -> dict:
    out: dict[SetPartition, Fraction] = {}
    for k, c in coeffs.items():
        for kk, d in table[k].items():
            out[kk] = out.get(kk, Fraction(0)) + c * d
    return out


def ncsym_to_m(f: NCSymElement) -> NCSymElement:
    if f.basis == "m":
        return f
    return f._new(_apply(f.coeffs, _to_m_table(f.basis, f.degree)), basis="m")


def m_to_ncsym_basis(f: NCSymElement, basis: str) -> NCSymElement:
    if f.basis != "m":
        raise ValueError("m_to_ncsym_basis expects an m-basis element")
    n = f.degree
    if basis == "m":
        return f
    if basis == "p":
        return f._new(_apply(f.coeffs, _m_to_p_table(n)), basis="p")
    if basis == "h":
        p = _apply(f.coeffs, _m_to_p_table(n))
        return f._new(_apply(p, _p_to_h_table(n)), basis="h")
    if basis == "e":
        return f._new(_apply(f.coeffs, _m_to_e_table(n)), basis="e")
    raise ValueError(f"unknown NCSym basis {basis!r}")


def ncsym_convert(f: NCSymElement, basis: str) -> NCSymElement:
    if basis not in NCSymElement.BASES:
        raise ValueError(f"unknown NCSym basis {basis!r}")
    if basis == f.basis:
        return f
    n = f.degree
    # direct p <-> h routes avoid a detour through m
    if f.basis == "h" and basis == "p":
        return f._new(_apply(f.coeffs, _h_to_p_table(n)), basis="p")
    if f.basis == "p" and basis == "h":
        return f._new(_apply(f.coeffs, _p_to_h_table(n)), basis="h")
    return m_to_ncsym_basis(ncsym_to_m(f), basis)


# --------------------------------------------------------------------------
# operations


def omega_ncsym(f: NCSymElement) -> NCSymElement:
    """omega(p_pi) = (-1)^(n - l(pi)) p_pi; the result is returned in f's basis."""
    n = f.degree
    p = f.to("p")
    flipped = p._new({k: v if (n - len(k)) % 2 == 0 else -v for k, v in p.coeffs.items()})
    return flipped.to(f.basis)


def induct(f: NCSymElement) -> NCSymElement:
    """The induction map: m_pi -> m_{pi + (n+1)}, p_pi -> p_{pi + (n+1)}.

    Elements in the e or h basis go through p and come back in their basis.
    """
    if f.degree < 1:
        raise ValueError("induction needs degree >= 1")
    if f.basis in ("m", "p"):
        return f._new({pi_plus(k): v for k, v in f.coeffs.items()}, degree=f.degree + 1)
    p = f.to("p")
    return p._new({pi_plus(k): v for k, v in p.coeffs.items()}, degree=f.degree + 1).to(f.basis)


def induct_h_formula(pi: SetPartition) -> NCSymElement:
    """h_pi induced, from the closed double sum over sigma <= pi and tau <= sigma + (n+1).

    Kept separate from :func:`induct` so the two can be checked against each other.
    """
    n = pi.n
    out: dict[SetPartition, Fraction] = {}
    for sigma in _below(n)[pi]:
        sp = pi_plus(sigma)
        scale = Fraction(abs_mobius_bottom(sigma), abs_mobius_bottom(sp))
        for tau in _below(n + 1)[sp]:
            out[tau] = out.get(tau, Fraction(0)) + scale * mobius(tau, sp)
    return NCSymElement(n + 1, "h", out)


def rho(f: NCSymElement) -> SymElement:
    """Let the variables commute.

    m_pi -> |pi| m_lambda, e_pi -> pi! e_lambda, p_pi -> p_lambda,
    h_pi -> pi! h_lambda.
    """
    out: dict[tuple[int, ...], Fraction] = {}
    for pi, c in f.coeffs.items():
        lam, absval, fact = pi_statistics(pi)
        w = {"m": absval, "e": fact, "p": 1, "h": fact}[f.basis]
        out[lam] = out.get(lam, Fraction(0)) + c * w
    return SymElement(f.degree, f.basis, out)


def sn_action(delta: Sequence[int], f: NCSymElement) -> NCSymElement:
    """Permute positions: the letter at position j moves to position delta(j).

    ``delta`` is one-line notation, ``delta[j-1] = delta(j)``.  The action is
    a relabelling of set-partition keys in every basis, since each basis is
    defined equivariantly from the lattice structure.
    """
    n = f.degree
    if sorted(delta) != list(range(1, n + 1)):
        raise ValueError(f"{tuple(delta)} is not a permutation of [{n}]")
    return f._new({k.relabel(delta): v for k, v in f.coeffs.items()})


def _merge_products(pi: SetPartition, sigma: SetPartition) -> Iterable[SetPartition]:
    """All tau of [a+b] restricting to pi on [a] and to sigma (shifted) on the rest."""
    a = pi.n
    left = list(pi)
    right = [tuple(x + a for x in b) for b in sigma]
    k = len(right)
    # assign each right block to a distinct left block or to nothing
    choices = range(-1, len(left))
    for assign in itertools.product(choices, repeat=k):
        used = [x for x in assign if x >= 0]
        if len(used) != len(set(used)):
            continue
        blocks = [list(b) for b in left]
        extra = []
        for rb, tgt in zip(right, assign):
            if tgt >= 0:
                blocks[tgt].extend(rb)
            else:
                extra.append(rb)
        yield SetPartition._trusted(tuple(sorted(b)) for b in sorted(blocks + extra, key=min))


def ncsym_multiply(f: NCSymElement, g: NCSymElement) -> NCSymElement:
    """Product in NCSym, computed in the m basis.

    The result is returned in f's basis when f and g share a basis, else in m.
    """
    fm, gm = ncsym_to_m(f), ncsym_to_m(g)
    out: dict[SetPartition, Fraction] = {}
    for pi, c in fm.coeffs.items():
        for sigma, d in gm.coeffs.items():
            for tau in _merge_products(pi, sigma):
                out[tau] = out.get(tau, Fraction(0)) + c * d
    prod = NCSymElement(f.degree + g.degree, "m", out)
    return prod.to(f.basis) if f.basis == g.basis else prod


def congruence_class(tau: SetPartition, i: int) -> tuple[tuple[int, ...], int]:
    """Invariant of the congruence mod i: (lambda(tau), size of the block of i)."""
    return tau.shape(), len(tau.block_of(i))


def congruence_collapse(f: NCSymElement, i: int) -> dict[tuple[tuple[int, ...], int], Fraction]:
    """Sum the h-coefficients of ``f`` over each congruence-mod-i class."""
    if f.degree and not 1 <= i <= f.degree:
        raise ValueError(f"position {i} outside [1, {f.degree}]")
    h = f.to("h")
    out: dict[tuple[tuple[int, ...], int], Fraction] = {}
    for tau, c in h.coeffs.items():
        key = congruence_class(tau, i)
        out[key] = out.get(key, Fraction(0)) + c
    return {k: v for k, v in out.items() if v}


def _ordered_types(tau: SetPartition, first: int) -> tuple[int, tuple[int, ...]]:
    b1 = tau.block_of(first)
    rest = sorted((len(b) for b in tau if b != b1), reverse=True)
    return len(b1), tuple(rest)


def check_induction_theorem(pi: SetPartition) -> tuple[bool, Any]:
    """Check the support and grouped-sum statements for the induced ``h_pi``.

    Returns ``(True, None)`` or ``(False, witness)``, where the witness is
    ``(pi, tau)`` for a support violation or ``(pi, alpha, got, expected)``
    for a grouped-sum violation.  P(alpha) is read literally: partitions
    tau <= pi + (n+1) whose block containing n+1 has size alpha_1 and whose
    remaining blocks have sizes alpha_2, ..., alpha_l.
    """
    n = pi.n
    top = pi_plus(pi)
    coeffs = induct(NCSymElement(n, "h", {pi: 1})).coeffs
    for tau in coeffs:
        if not leq(tau, top):
            return False, (pi, tau)
    below = _below(n + 1)[top]
    slash, plus = pi_slash(pi), top
    inv_b = Fraction(1, len(pi.block_of(n)))
    for alpha in compositions(n + 1):
        key = (alpha[0], tuple(sorted(alpha[1:], reverse=True)))
        members = [t for t in below if _ordered_types(t, n + 1) == key]
        got = sum((coeffs.get(t, Fraction(0)) for t in members), Fraction(0))
        if members == [slash]:
            expected = -inv_b
        elif members == [plus]:
            expected = inv_b
        else:
            expected = Fraction(0)
        if got != expected:
            return False, (pi, alpha, got, expected)
    return True, None
