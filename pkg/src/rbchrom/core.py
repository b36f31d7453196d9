"""Integer partitions, compositions, position subsets and the partition lattice.

Integer partitions and compositions are plain tuples of positive integers.
Subsets of ``[n-1]`` carry their ambient ``n`` in :class:`PositionSubset`.
Set partitions of ``[n]`` are :class:`SetPartition` values, a tuple of blocks
kept in canonical form (blocks sorted by minimum, elements ascending) so that
structural equality is mathematical equality and they can be used as keys.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator, Sequence

Partition = tuple[int, ...]
Composition = tuple[int, ...]


# --------------------------------------------------------------------------
# integer partitions and compositions


def as_partition(parts: Iterable[int]) -> Partition:
    """Return ``parts`` sorted into a partition, rejecting non-positive parts."""
    lam = tuple(sorted((int(p) for p in parts), reverse=True))
    if any(p <= 0 for p in lam):
        raise ValueError(f"partition parts must be positive: {lam}")
    return lam


def as_composition(parts: Iterable[int]) -> Composition:
    alpha = tuple(int(p) for p in parts)
    if any(p <= 0 for p in alpha):
        raise ValueError(f"composition parts must be positive: {alpha}")
    return alpha


def conjugate(lam: Sequence[int]) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= i) for i in range(1, lam[0] + 1))


def multiplicities(lam: Sequence[int]) -> dict[int, int]:
    """Map each part size to the number of times it occurs."""
    out: dict[int, int] = {}
    for p in lam:
        out[p] = out.get(p, 0) + 1
    return out


def mult_factorial(lam: Sequence[int]) -> int:
    """r_1! r_2! ... where r_i is the multiplicity of part i."""
    return prod(factorial(r) for r in multiplicities(lam).values())


def parts_factorial(lam: Sequence[int]) -> int:
    """1!^{r_1} 2!^{r_2} ... , the product of factorials of the parts."""
    return prod(factorial(p) for p in lam)


def comp_to_set(alpha: Sequence[int]) -> PositionSubset:
    """The partial-sum bijection from compositions of n to subsets of [n-1]."""
    alpha = as_composition(alpha)
    acc = list(itertools.accumulate(alpha))
    return PositionSubset(frozenset(acc[:-1]), sum(alpha))


def set_to_comp(subset: PositionSubset) -> Composition:
    """Inverse of :func:`comp_to_set`."""
    n = subset.ambient
    if n == 0:
        return ()
    cuts = [0, *sorted(subset.elements), n]
    return tuple(b - a for a, b in zip(cuts, cuts[1:]))


def is_finer(alpha: Sequence[int], beta: Sequence[int]) -> bool:
    """True iff ``alpha`` refines ``beta`` (set(beta) is a subset of set(alpha))."""
    if sum(alpha) != sum(beta):
        raise ValueError(f"compositions of different weight: {tuple(alpha)} vs {tuple(beta)}")
    return comp_to_set(beta).elements <= comp_to_set(alpha).elements


def comp_op(alpha: Sequence[int]) -> Composition:
    return tuple(reversed(alpha))


@dataclass(frozen=True)
class PositionSubset:
    """A subset of ``[ambient - 1]``."""

    elements: frozenset[int]
    ambient: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "elements", frozenset(self.elements))
        bad = [i for i in self.elements if not 1 <= i <= self.ambient - 1]
        if bad:
            raise ValueError(f"elements {sorted(bad)} outside [1, {self.ambient - 1}]")

    def complement(self) -> PositionSubset:
        return PositionSubset(frozenset(range(1, self.ambient)) - self.elements, self.ambient)

    def opposite(self) -> PositionSubset:
        return PositionSubset(frozenset(self.ambient - i for i in self.elements), self.ambient)

    def composition(self) -> Composition:
        return set_to_comp(self)

    def encode(self) -> str:
        return "{" + ",".join(map(str, sorted(self.elements))) + "}@n=" + str(self.ambient)

    @classmethod
    def decode(cls, text: str) -> PositionSubset:
        body, _, amb = text.strip().partition("@n=")
        if not (body.startswith("{") and body.endswith("}")) or not amb:
            raise ValueError(f"malformed subset encoding {text!r}")
        inner = body[1:-1].strip()
        elems = frozenset(int(t) for t in inner.split(",")) if inner else frozenset()
        return cls(elems, int(amb))


# --------------------------------------------------------------------------
# set partitions


class SetPartition(tuple):
    """A set partition of ``[n]`` in canonical form.

    Behaves as a tuple of blocks, each block an ascending tuple of integers.
    ``SetPartition([[3, 1], [2]])`` and ``SetPartition([(2,), (1, 3)])`` are
    equal.  The empty set partition (``n = 0``) is allowed.
    """

    __slots__ = ()

    def __new__(cls, blocks: Iterable[Iterable[int]] = ()) -> SetPartition:
        bl = [tuple(sorted(int(x) for x in b)) for b in blocks]
        if any(not b for b in bl):
            raise ValueError("set partition blocks must be nonempty")
        bl.sort(key=lambda b: b[0])
        elems = [x for b in bl for x in b]
        if sorted(elems) != list(range(1, len(elems) + 1)):
            raise ValueError(f"blocks {bl} do not partition [1..{len(elems)}]")
        return tuple.__new__(cls, bl)

    @classmethod
    def _trusted(cls, blocks: Iterable[tuple[int, ...]]) -> SetPartition:
        return tuple.__new__(cls, blocks)

    @classmethod
    def from_rgs(cls, rgs: Sequence[int]) -> SetPartition:
        """Build from a restricted growth string (0-based block indices)."""
        blocks: list[list[int]] = []
        for pos, b in enumerate(rgs, start=1):
            if b == len(blocks):
                blocks.append([pos])
            elif 0 <= b < len(blocks):
                blocks[b].append(pos)
            else:
                raise ValueError(f"not a restricted growth string: {tuple(rgs)}")
        return cls._trusted(tuple(b) for b in blocks)

    @classmethod
    def from_labels(cls, labels: Sequence[object]) -> SetPartition:
        """The kernel of a word: positions with equal letters share a block."""
        seen: dict[object, list[int]] = {}
        for pos, a in enumerate(labels, start=1):
            seen.setdefault(a, []).append(pos)
        return cls._trusted(tuple(b) for b in seen.values())

    @classmethod
    def discrete(cls, n: int) -> SetPartition:
        """0-hat: all singletons."""
        return cls._trusted((i,) for i in range(1, n + 1))

    @classmethod
    def full(cls, n: int) -> SetPartition:
        """1-hat: a single block (empty for n = 0)."""
        return cls._trusted([tuple(range(1, n + 1))] if n else [])

    @property
    def n(self) -> int:
        return sum(len(b) for b in self)

    @property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self)

    def __repr__(self) -> str:
        return f"SetPartition({self.encode()!r})"

    def rgs(self) -> tuple[int, ...]:
        out = [0] * self.n
        for k, b in enumerate(self):
            for x in b:
                out[x - 1] = k
        return tuple(out)

    def block_index(self) -> dict[int, int]:
        return {x: k for k, b in enumerate(self) for x in b}

    def block_of(self, i: int) -> tuple[int, ...]:
        for b in self:
            if i in b:
                return b
        raise ValueError(f"{i} not in the ground set of {self.encode()}")

    def shape(self) -> Partition:
        """lambda(pi): the block sizes as an integer partition."""
        return tuple(sorted((len(b) for b in self), reverse=True))

    def relabel(self, perm: Sequence[int]) -> SetPartition:
        """Apply the permutation ``i -> perm[i-1]`` to every element."""
        return SetPartition(tuple(perm[x - 1] for x in b) for b in self)

    def restrict(self, elements: Iterable[int]) -> SetPartition:
        """Restriction to ``elements``, relabelled order-preservingly to [k]."""
        keep = sorted(elements)
        pos = {x: i for i, x in enumerate(keep, start=1)}
        return SetPartition(
            tuple(pos[x] for x in b if x in pos) for b in self if any(x in pos for x in b)
        )

    def encode(self) -> str:
        sep = "," if self.n >= 10 else ""
        return "/".join(sep.join(map(str, b)) for b in self)

    @classmethod
    def decode(cls, text: str) -> SetPartition:
        text = text.strip()
        if not text:
            return cls(())
        blocks = []
        for chunk in text.split("/"):
            items = chunk.split(",") if "," in chunk else list(chunk)
            try:
                blocks.append([int(t) for t in items])
            except ValueError:
                raise ValueError(f"malformed set partition encoding {text!r}") from None
        return cls(blocks)


def _check_same_n(pi: SetPartition, sigma: SetPartition) -> None:
    if pi.n != sigma.n:
        raise ValueError(f"set partitions of different ground sets: {pi.encode()} vs {sigma.encode()}")


def leq(pi: SetPartition, sigma: SetPartition) -> bool:
    """Refinement order: every block of ``pi`` lies inside a block of ``sigma``."""
    _check_same_n(pi, sigma)
    idx = sigma.block_index()
    return all(len({idx[x] for x in b}) == 1 for b in pi)


def meet(pi: SetPartition, sigma: SetPartition) -> SetPartition:
    _check_same_n(pi, sigma)
    idx = sigma.block_index()
    out: list[tuple[int, ...]] = []
    for b in pi:
        groups: dict[int, list[int]] = {}
        for x in b:
            groups.setdefault(idx[x], []).append(x)
        out.extend(tuple(g) for g in groups.values())
    return SetPartition(out)


def join(pi: SetPartition, sigma: SetPartition) -> SetPartition:
    _check_same_n(pi, sigma)
    parent = list(range(pi.n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for b in (*pi, *sigma):
        r = find(b[0])
        for x in b[1:]:
            parent[find(x)] = r
    return SetPartition.from_labels([find(x) for x in range(1, pi.n + 1)])


def mobius(sigma: SetPartition, pi: SetPartition) -> int:
    """Moebius function of the partition lattice, mu(sigma, pi) for sigma <= pi.

    Product over blocks B of pi of (-1)^(b-1) (b-1)!, b the number of blocks
    of sigma inside B.
    """
    if not leq(sigma, pi):
        raise ValueError(f"mobius({sigma.encode()}, {pi.encode()}): not sigma <= pi")
    idx = pi.block_index()
    counts: dict[int, int] = {}
    for b in sigma:
        k = idx[b[0]]
        counts[k] = counts.get(k, 0) + 1
    return prod((-1) ** (c - 1) * factorial(c - 1) for c in counts.values())


def abs_mobius_bottom(pi: SetPartition) -> int:
    """|mu(0-hat, pi)| = prod over blocks of (|B| - 1)!."""
    return prod(factorial(len(b) - 1) for b in pi)


def pi_statistics(pi: SetPartition) -> tuple[Partition, int, int]:
    """(lambda(pi), |pi|, pi!) with |pi| = prod r_i! and pi! = prod i!^{r_i}."""
    lam = pi.shape()
    return lam, mult_factorial(lam), parts_factorial(lam)


def pi_plus(pi: SetPartition) -> SetPartition:
    """Insert n+1 into the block containing n."""
    n = pi.n
    if n == 0:
        raise ValueError("pi_plus needs a nonempty ground set")
    return SetPartition._trusted(b + (n + 1,) if b[-1] == n else b for b in pi)


def pi_slash(pi: SetPartition, m: int = 1) -> SetPartition:
    """Append the block {n+1, ..., n+m} (a new singleton when m = 1)."""
    n = pi.n
    return SetPartition._trusted((*pi, tuple(range(n + 1, n + m + 1))))


# --------------------------------------------------------------------------
# enumeration


def _rgs_iter(n: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    word = [0] * n

    def rec(pos: int, top: int) -> Iterator[tuple[int, ...]]:
        if pos == n:
            yield tuple(word)
            return
        for b in range(top + 2):
            word[pos] = b
            yield from rec(pos + 1, max(top, b))

    yield from rec(1, 0)


@lru_cache(maxsize=None)
def set_partitions(n: int) -> tuple[SetPartition, ...]:
    """All set partitions of [n], in lexicographic order of restricted growth strings."""
    return tuple(SetPartition.from_rgs(w) for w in _rgs_iter(n))


def set_partitions_of(elements: Sequence[int]) -> Iterator[list[list[int]]]:
    """Set partitions of an arbitrary finite sequence, as lists of blocks."""
    elements = list(elements)
    for w in _rgs_iter(len(elements)):
        blocks: list[list[int]] = []
        for x, b in zip(elements, w):
            if b == len(blocks):
                blocks.append([x])
            else:
                blocks[b].append(x)
        yield blocks


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    """Integer partitions of n in lexicographic order ((1,1,..) first, (n,) last)."""

    def rec(rest: int, cap: int) -> Iterator[Partition]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first):
                yield (first, *tail)

    return tuple(sorted(rec(n, n)))


@lru_cache(maxsize=None)
def compositions(n: int) -> tuple[Composition, ...]:
    """Compositions of n in lexicographic order."""
    if n == 0:
        return ((),)
    out = [set_to_comp(PositionSubset(frozenset(s), n)) for s in subsets(range(1, n))]
    return tuple(sorted(out))


def subsets(items: Iterable[int]) -> Iterator[frozenset[int]]:
    """All subsets of ``items`` in binary-counter order of the sorted items."""
    items = sorted(items)
    for mask in range(1 << len(items)):
        yield frozenset(x for k, x in enumerate(items) if mask >> k & 1)


def listings(items: Iterable[object]) -> Iterator[tuple]:
    """All listings (bijective words) of ``items`` in lexicographic order."""
    return itertools.permutations(sorted(items))


def enumerate_kind(kind: str, n: int) -> Iterator[object]:
    """Dispatch used by the CLI: 'set-partitions', 'partitions', 'compositions',
    'listings' (of [n]) or 'subsets' (of [n])."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    table = {
        "set-partitions": lambda: iter(set_partitions(n)),
        "partitions": lambda: iter(partitions(n)),
        "compositions": lambda: iter(compositions(n)),
        "listings": lambda: listings(range(1, n + 1)),
        "subsets": lambda: subsets(range(1, n + 1)),
    }
    if kind not in table:
        raise ValueError(f"unknown enumeration kind {kind!r}")
    return table[kind]()


# --------------------------------------------------------------------------
# text encodings


def encode_partition(lam: Sequence[int]) -> str:
    return ",".join(map(str, lam))


def decode_partition(text: str) -> Partition:
    text = text.strip()
    if not text:
        return ()
    try:
        return as_partition(int(t) for t in text.split(","))
    except ValueError:
        raise ValueError(f"malformed partition encoding {text!r}") from None


def encode_composition(alpha: Sequence[int]) -> str:
    return "(" + "|".join(map(str, alpha)) + ")"


def decode_composition(text: str) -> Composition:
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError(f"malformed composition encoding {text!r}")
    inner = text[1:-1]
    return as_composition(int(t) for t in inner.split("|")) if inner else ()
