"""Graphs, digraphs and posets on the vertex set ``{1, ..., n}``, and the
constructions, enumerations and statistics needed by the invariants.

Everything here is exhaustive and meant for desk-scale inputs (n up to 7 or 8).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Iterable, Iterator, Mapping, Sequence, Union

from .core import SetPartition

Arc = tuple[int, int]


class StructureInputError(ValueError):
    """Malformed structure input; ``field`` names the offending JSON field."""

    def __init__(self, field_name: str, message: str):
        super().__init__(f"{field_name}: {message}")
        self.field = field_name


def _check_vertex(n: int, v: int, what: str) -> None:
    if not 1 <= v <= n:
        raise StructureInputError(what, f"vertex {v} outside 1..{n}")


@dataclass(frozen=True)
class Graph:
    """Simple graph; edges stored as pairs ``(u, v)`` with ``u < v``."""

    n: int
    edges: frozenset[Arc] = frozenset()

    def __post_init__(self) -> None:
        norm = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise StructureInputError("edges", f"self-pair ({u}, {v}) not allowed in a graph")
            _check_vertex(self.n, u, "edges")
            _check_vertex(self.n, v, "edges")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))

    @cached_property
    def adj(self) -> dict[int, frozenset[int]]:
        out: dict[int, set[int]] = {v: set() for v in range(1, self.n + 1)}
        for u, v in self.edges:
            out[u].add(v)
            out[v].add(u)
        return {v: frozenset(s) for v, s in out.items()}

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def to_json(self) -> dict[str, Any]:
        return {"n": self.n, "edges": [list(e) for e in sorted(self.edges)]}


@dataclass(frozen=True)
class Digraph:
    """Directed graph; arcs are ordered pairs, loops allowed."""

    n: int
    arcs: frozenset[Arc] = frozenset()

    def __post_init__(self) -> None:
        arcs = frozenset((int(u), int(v)) for u, v in self.arcs)
        for u, v in arcs:
            _check_vertex(self.n, u, "arcs")
            _check_vertex(self.n, v, "arcs")
        object.__setattr__(self, "arcs", arcs)

    @cached_property
    def succ(self) -> dict[int, frozenset[int]]:
        out: dict[int, set[int]] = {v: set() for v in range(1, self.n + 1)}
        for u, v in self.arcs:
            out[u].add(v)
        return {v: frozenset(s) for v, s in out.items()}

    @cached_property
    def pred(self) -> dict[int, frozenset[int]]:
        out: dict[int, set[int]] = {v: set() for v in range(1, self.n + 1)}
        for u, v in self.arcs:
            out[v].add(u)
        return {v: frozenset(s) for v, s in out.items()}

    def has_loops(self) -> bool:
        return any(u == v for u, v in self.arcs)

    def to_json(self) -> dict[str, Any]:
        return {"n": self.n, "arcs": [list(e) for e in sorted(self.arcs)]}


@dataclass(frozen=True)
class Poset:
    """Finite poset given by its strict order relation; verified on construction."""

    n: int
    strict: frozenset[Arc] = frozenset()

    def __post_init__(self) -> None:
        rel = frozenset((int(u), int(v)) for u, v in self.strict)
        for u, v in rel:
            _check_vertex(self.n, u, "strict")
            _check_vertex(self.n, v, "strict")
            if u == v:
                raise StructureInputError("strict", f"relation is not irreflexive at {u}")
            if (v, u) in rel:
                raise StructureInputError("strict", f"relation is not antisymmetric at ({u}, {v})")
        for u, v in rel:
            for w in range(1, self.n + 1):
                if (v, w) in rel and (u, w) not in rel:
                    raise StructureInputError("strict", f"relation is not transitive: {u}<{v}<{w}")
        object.__setattr__(self, "strict", rel)

    @classmethod
    def from_covers(cls, n: int, covers: Iterable[Arc]) -> Poset:
        """Poset generated by ``covers`` (transitive closure is taken)."""
        rel = {(int(u), int(v)) for u, v in covers}
        changed = True
        while changed:
            changed = False
            for (a, b), (c, d) in itertools.product(list(rel), repeat=2):
                if b == c and (a, d) not in rel:
                    rel.add((a, d))
                    changed = True
        return cls(n, frozenset(rel))

    @classmethod
    def chain(cls, n: int) -> Poset:
        return cls(n, frozenset((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)))

    @classmethod
    def antichain(cls, n: int) -> Poset:
        return cls(n, frozenset())

    def less(self, u: int, v: int) -> bool:
        return (u, v) in self.strict

    def leq(self, u: int, v: int) -> bool:
        return u == v or (u, v) in self.strict

    def comparable(self, u: int, v: int) -> bool:
        return u == v or (u, v) in self.strict or (v, u) in self.strict

    @cached_property
    def covers(self) -> frozenset[Arc]:
        return frozenset(
            (u, v) for u, v in self.strict
            if not any((u, w) in self.strict and (w, v) in self.strict for w in range(1, self.n + 1))
        )

    def is_covering(self, u: int, v: int) -> bool:
        return (u, v) in self.covers

    def minimal(self) -> list[int]:
        return [v for v in range(1, self.n + 1) if not any((u, v) in self.strict for u in range(1, self.n + 1))]

    def maximal(self) -> list[int]:
        return [v for v in range(1, self.n + 1) if not any((v, u) in self.strict for u in range(1, self.n + 1))]

    def dual(self) -> Poset:
        return Poset(self.n, frozenset((v, u) for u, v in self.strict))

    def interval(self, p: int, q: int) -> list[int]:
        return [r for r in range(1, self.n + 1) if self.leq(p, r) and self.leq(r, q)]

    def is_chain(self) -> bool:
        return len(self.strict) == self.n * (self.n - 1) // 2

    def to_json(self) -> dict[str, Any]:
        return {"n": self.n, "strict": [list(e) for e in sorted(self.strict)]}


Structure = Union[Graph, Digraph, Poset]


# --------------------------------------------------------------------------
# JSON input


def _pairs(data: Mapping[str, Any], key: str) -> list[Arc]:
    raw = data.get(key, [])
    if not isinstance(raw, list):
        raise StructureInputError(key, "expected a list of pairs")
    out = []
    for item in raw:
        if not (isinstance(item, (list, tuple)) and len(item) == 2 and all(isinstance(x, int) for x in item)):
            raise StructureInputError(key, f"malformed pair {item!r}")
        out.append((item[0], item[1]))
    return out


def structure_from_json(data: Any) -> Structure:
    """Parse ``{"n", "edges"}``, ``{"n", "arcs"}`` or ``{"n", "strict"[, "covers"]}``."""
    if not isinstance(data, dict):
        raise StructureInputError("<root>", "expected a JSON object")
    n = data.get("n")
    if not isinstance(n, int) or n < 0:
        raise StructureInputError("n", f"expected a nonnegative integer, got {n!r}")
    present = [k for k in ("edges", "arcs", "strict") if k in data]
    if len(present) != 1:
        raise StructureInputError("<root>", "exactly one of 'edges', 'arcs', 'strict' is required")
    kind = present[0]
    pairs = _pairs(data, kind)
    if kind == "edges":
        return Graph(n, frozenset(pairs))
    if kind == "arcs":
        return Digraph(n, frozenset(pairs))
    if data.get("covers", False):
        for u, v in pairs:
            _check_vertex(n, u, "strict")
            _check_vertex(n, v, "strict")
        return Poset.from_covers(n, pairs)
    return Poset(n, frozenset(pairs))


# --------------------------------------------------------------------------
# constructions


def inc(P: Poset) -> Graph:
    """Incomparability graph."""
    return Graph(P.n, frozenset(
        (u, v) for u in range(1, P.n + 1) for v in range(u + 1, P.n + 1) if not P.comparable(u, v)
    ))


def comparability(P: Poset) -> Graph:
    return Graph(P.n, frozenset((min(u, v), max(u, v)) for u, v in P.strict))


def digraph_of(P: Poset) -> Digraph:
    """D_P: arc (i, j) iff i <_P j."""
    return Digraph(P.n, P.strict)


def complement(X: Digraph | Graph) -> Digraph | Graph:
    """Digraph complement (V x V minus E, loops included) or graph complement."""
    n = X.n
    if isinstance(X, Graph):
        return Graph(n, frozenset(
            (u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if (u, v) not in X.edges
        ))
    return Digraph(n, frozenset(
        (u, v) for u in range(1, n + 1) for v in range(1, n + 1) if (u, v) not in X.arcs
    ))


def opposite(X: Digraph) -> Digraph:
    return Digraph(X.n, frozenset((v, u) for u, v in X.arcs))


def relabel(X: Structure, perm: Sequence[int]) -> Structure:
    """Rename vertex i to ``perm[i-1]``."""
    if sorted(perm) != list(range(1, X.n + 1)):
        raise ValueError(f"{tuple(perm)} is not a permutation of [{X.n}]")
    p = lambda v: perm[v - 1]  # noqa: E731
    if isinstance(X, Graph):
        return Graph(X.n, frozenset((p(u), p(v)) for u, v in X.edges))
    if isinstance(X, Digraph):
        return Digraph(X.n, frozenset((p(u), p(v)) for u, v in X.arcs))
    return Poset(X.n, frozenset((p(u), p(v)) for u, v in X.strict))


def restrict(X: Structure, S: Iterable[int]) -> Structure:
    """Induced substructure on ``S``, relabelled order-preservingly to 1..|S|."""
    keep = sorted(set(S))
    pos = {v: i for i, v in enumerate(keep, start=1)}
    k = len(keep)
    if isinstance(X, Graph):
        return Graph(k, frozenset((pos[u], pos[v]) for u, v in X.edges if u in pos and v in pos))
    if isinstance(X, Digraph):
        return Digraph(k, frozenset((pos[u], pos[v]) for u, v in X.arcs if u in pos and v in pos))
    return Poset(k, frozenset((pos[u], pos[v]) for u, v in X.strict if u in pos and v in pos))


def product(X: Digraph, Y: Digraph) -> Digraph:
    """X . Y: disjoint union, Y shifted by |X|, plus every arc from X to Y."""
    a = X.n
    arcs = set(X.arcs) | {(u + a, v + a) for u, v in Y.arcs}
    arcs |= {(u, v + a) for u in range(1, a + 1) for v in range(1, Y.n + 1)}
    return Digraph(a + Y.n, frozenset(arcs))


def discrete_digraph(n: int) -> Digraph:
    """T_n."""
    return Digraph(n, frozenset())


def ordinal_sum(P: Poset, Q: Poset) -> Poset:
    a = P.n
    rel = set(P.strict) | {(u + a, v + a) for u, v in Q.strict}
    rel |= {(u, v + a) for u in range(1, a + 1) for v in range(1, Q.n + 1)}
    return Poset(a + Q.n, frozenset(rel))


def disjoint_union(P: Poset, Q: Poset) -> Poset:
    a = P.n
    return Poset(a + Q.n, frozenset(set(P.strict) | {(u + a, v + a) for u, v in Q.strict}))


def add_edges(G: Graph, edges: Iterable[Arc]) -> Graph:
    return Graph(G.n, G.edges | frozenset((min(u, v), max(u, v)) for u, v in edges))


def delete_edge(X: Graph | Digraph, e: Arc) -> Graph | Digraph:
    if isinstance(X, Graph):
        key = (min(e), max(e))
        if key not in X.edges:
            raise ValueError(f"{e} is not an edge")
        return Graph(X.n, X.edges - {key})
    if tuple(e) not in X.arcs:
        raise ValueError(f"{e} is not an arc")
    return Digraph(X.n, X.arcs - {tuple(e)})


def _compact(n: int, removed: int) -> dict[int, int]:
    return {v: v if v < removed else v - 1 for v in range(1, n + 1) if v != removed}


def contract_edge(X: Graph | Digraph, e: Arc) -> Graph | Digraph:
    """Contract ``e``; the merged vertex takes the smaller endpoint's label and
    the remaining labels are compacted in order (so contracting ``(n-1, n)``
    leaves the merged vertex at ``n-1``).

    Digraphs follow the in/out rule: ``(w, e)`` iff ``(w, u)`` and
    ``(e, w)`` iff ``(v, w)``; arcs touching only ``u`` and ``v`` are dropped.
    """
    u, v = e
    if u == v:
        raise ValueError("cannot contract a loop")
    keep, gone = min(u, v), max(u, v)
    ren = _compact(X.n, gone)
    if isinstance(X, Graph):
        if not X.has_edge(u, v):
            raise ValueError(f"{e} is not an edge")
        edges = set()
        for a, b in X.edges:
            a2, b2 = (keep if a == gone else a), (keep if b == gone else b)
            if a2 != b2:
                edges.add((ren[a2], ren[b2]))
        return Graph(X.n - 1, frozenset(edges))
    if (u, v) not in X.arcs:
        raise ValueError(f"{e} is not an arc")
    arcs = set()
    for a, b in X.arcs:
        if a not in (u, v) and b not in (u, v):
            arcs.add((ren[a], ren[b]))
        elif b == u and a not in (u, v):
            arcs.add((ren[a], ren[keep]))
        elif a == v and b not in (u, v):
            arcs.add((ren[keep], ren[b]))
    return Digraph(X.n - 1, frozenset(arcs))


def poset_delete_covering(P: Poset, e: Arc) -> Poset:
    if not P.is_covering(*e):
        raise ValueError(f"{e} is not a covering pair")
    return Poset(P.n, P.strict - {tuple(e)})


def poset_contract_covering(P: Poset, e: Arc) -> Poset:
    if not P.is_covering(*e):
        raise ValueError(f"{e} is not a covering pair")
    D = contract_edge(digraph_of(P), e)
    return Poset(D.n, D.arcs)


def move_to_end(n: int, a: int, b: int) -> tuple[int, ...]:
    """Permutation sending a -> n-1, b -> n and the other vertices, in order, to 1..n-2."""
    others = [v for v in range(1, n + 1) if v not in (a, b)]
    perm = [0] * n
    for i, v in enumerate(others, start=1):
        perm[v - 1] = i
    perm[a - 1], perm[b - 1] = n - 1, n
    return tuple(perm)


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    parts, start = [], 1
    for s in sizes:
        parts.append(range(start, start + s))
        start += s
    n = start - 1
    block = {v: k for k, r in enumerate(parts) for v in r}
    return Graph(n, frozenset((u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if block[u] != block[v]))


def disjoint_chains(sizes: Sequence[int]) -> Poset:
    P = Poset(0)
    for s in sizes:
        P = disjoint_union(P, Poset.chain(s))
    return P


# --------------------------------------------------------------------------
# listings, extensions, Hamiltonian counts


def descent_set(X: Digraph, sigma: Sequence[int]) -> frozenset[int]:
    """X-descent set of a listing: positions i with (sigma_i, sigma_{i+1}) an arc."""
    arcs = X.arcs
    return frozenset(i for i in range(1, len(sigma)) if (sigma[i - 1], sigma[i]) in arcs)


def linear_extensions(P: Poset) -> Iterator[tuple[int, ...]]:
    for sigma in itertools.permutations(range(1, P.n + 1)):
        if not any((sigma[j], sigma[i]) in P.strict for i in range(P.n) for j in range(i + 1, P.n)):
            yield sigma


def quasi_linear_extensions(P: Poset) -> Iterator[tuple[int, ...]]:
    for sigma in itertools.permutations(range(1, P.n + 1)):
        if not any((sigma[i + 1], sigma[i]) in P.strict for i in range(P.n - 1)):
            yield sigma


def extension_counts(P: Poset) -> tuple[int, int]:
    """(number of linear extensions, number of quasi-linear extensions)."""
    lin = quasi = 0
    for sigma in quasi_linear_extensions(P):
        quasi += 1
        if not any((sigma[j], sigma[i]) in P.strict for i in range(P.n) for j in range(i + 1, P.n)):
            lin += 1
    return lin, quasi


def hamiltonian_paths(X: Digraph) -> int:
    arcs = X.arcs
    return sum(
        1 for s in itertools.permutations(range(1, X.n + 1))
        if all((s[i], s[i + 1]) in arcs for i in range(X.n - 1))
    )


def hamiltonian_cycles(X: Digraph) -> int:
    """Directed Hamiltonian cycles, each counted once up to rotation."""
    n, arcs = X.n, X.arcs
    if n == 0:
        return 0
    count = 0
    for rest in itertools.permutations(range(2, n + 1)):
        s = (1, *rest)
        if all((s[i], s[(i + 1) % n]) in arcs for i in range(n)):
            count += 1
    return count


def is_tournament(X: Digraph) -> bool:
    if X.has_loops():
        return False
    return all(((u, v) in X.arcs) != ((v, u) in X.arcs) for u in range(1, X.n + 1) for v in range(u + 1, X.n + 1))


def tournaments(n: int) -> Iterator[Digraph]:
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    for bits in itertools.product((0, 1), repeat=len(pairs)):
        yield Digraph(n, frozenset((u, v) if b == 0 else (v, u) for (u, v), b in zip(pairs, bits)))


# --------------------------------------------------------------------------
# stable partitions


def stable_partitions(G: Graph) -> Iterator[SetPartition]:
    """Set partitions of the vertex set whose blocks are independent sets."""
    n = G.n
    adj = G.adj
    blocks: list[list[int]] = []

    def rec(v: int) -> Iterator[SetPartition]:
        if v > n:
            yield SetPartition._trusted(tuple(b) for b in blocks)
            return
        for b in blocks:
            if not any(w in adj[v] for w in b):
                b.append(v)
                yield from rec(v + 1)
                b.pop()
        blocks.append([v])
        yield from rec(v + 1)
        blocks.pop()

    yield from rec(1)


def stable_partition_counts(G: Graph) -> dict[tuple[int, ...], int]:
    out: dict[tuple[int, ...], int] = {}
    for pi in stable_partitions(G):
        lam = pi.shape()
        out[lam] = out.get(lam, 0) + 1
    return out


# --------------------------------------------------------------------------
# bags of sticks and covers


def bag_of_sticks(lam: Sequence[int]) -> Digraph:
    """P_lambda: directed paths on consecutive integers of sizes lam_1, lam_2, ..."""
    arcs, start = set(), 1
    for size in lam:
        arcs |= {(v, v + 1) for v in range(start, start + size - 1)}
        start += size
    return Digraph(start - 1, frozenset(arcs))


def _path_cycle_shape(n: int, arcs: Iterable[Arc]) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """(path sizes, cycle sizes) if in/out-degrees are all <= 1, else None."""
    succ: dict[int, int] = {}
    has_pred: set[int] = set()
    for u, v in arcs:
        if u in succ or v in has_pred:
            return None
        succ[u] = v
        has_pred.add(v)
    seen: set[int] = set()
    paths, cycles = [], []
    for start in range(1, n + 1):
        if start in has_pred or start in seen:
            continue
        size, v = 0, start
        while v is not None:
            seen.add(v)
            size += 1
            v = succ.get(v)
        paths.append(size)
    for start in range(1, n + 1):
        if start in seen:
            continue
        size, v = 0, start
        while v not in seen:
            seen.add(v)
            size += 1
            v = succ[v]
        cycles.append(size)
    return tuple(sorted(paths, reverse=True)), tuple(sorted(cycles, reverse=True))


def bag_type(n: int, arcs: Iterable[Arc]) -> tuple[int, ...] | None:
    """Stick type of the spanning subdigraph ``([n], arcs)``, or None if it is not a bag."""
    shape = _path_cycle_shape(n, arcs)
    if shape is None or shape[1]:
        return None
    return shape[0]


def is_bag_of_sticks(X: Digraph) -> bool:
    return bag_type(X.n, X.arcs) is not None


def stick_type(X: Digraph) -> tuple[int, ...]:
    lam = bag_type(X.n, X.arcs)
    if lam is None:
        raise ValueError("digraph is not a bag of sticks")
    return lam


def _degree_bounded_subsets(X: Digraph, acyclic: bool) -> Iterator[frozenset[Arc]]:
    arcs = sorted(X.arcs)
    succ: dict[int, int] = {}
    pred: dict[int, int] = {}
    chosen: list[Arc] = []

    def closes_cycle(u: int, v: int) -> bool:
        w = v
        while w in succ:
            w = succ[w]
            if w == u:
                return True
        return w == u

    def rec(i: int) -> Iterator[frozenset[Arc]]:
        if i == len(arcs):
            yield frozenset(chosen)
            return
        yield from rec(i + 1)
        u, v = arcs[i]
        if u in succ or v in pred or (acyclic and closes_cycle(u, v)):
            return
        succ[u], pred[v] = v, u
        chosen.append((u, v))
        yield from rec(i + 1)
        chosen.pop()
        del succ[u], pred[v]

    yield from rec(0)


def path_covers(X: Digraph) -> Iterator[tuple[frozenset[Arc], tuple[int, ...]]]:
    """Arc subsets S for which (V, S) is a bag of sticks, with their stick types."""
    for S in _degree_bounded_subsets(X, acyclic=True):
        yield S, bag_type(X.n, S)  # type: ignore[misc]


def path_cycle_covers(X: Digraph) -> Iterator[tuple[frozenset[Arc], tuple[int, ...], tuple[int, ...]]]:
    """Path-cycle covers S with (path sizes pi(S), cycle sizes sigma(S))."""
    if X.has_loops():
        raise ValueError("path-cycle covers are defined here for loopless digraphs")
    for S in _degree_bounded_subsets(X, acyclic=False):
        paths, cycles = _path_cycle_shape(X.n, S)  # type: ignore[misc]
        yield S, paths, cycles


# --------------------------------------------------------------------------
# unit interval orders


def admissible_functions(n: int) -> Iterator[tuple[int, ...]]:
    """Non-decreasing f: [n-2] -> [n-1] with f(i) >= i, as tuples (f(1), ..., f(n-2))."""
    k = max(n - 2, 0)

    def rec(i: int, lo: int, acc: list[int]) -> Iterator[tuple[int, ...]]:
        if i > k:
            yield tuple(acc)
            return
        for val in range(max(lo, i), n):
            acc.append(val)
            yield from rec(i + 1, val, acc)
            acc.pop()

    yield from rec(1, 1, [])


def unit_interval_order(f: Sequence[int], n: int) -> Poset:
    """Irreducible natural unit interval order on [n] encoded by ``f``.

    Element i (i <= n-2) lies below exactly f(i)+2, ..., n.
    """
    f = tuple(f)
    if len(f) != max(n - 2, 0):
        raise ValueError(f"f must have {max(n - 2, 0)} values, got {len(f)}")
    for i, val in enumerate(f, start=1):
        if not i <= val <= n - 1:
            raise ValueError(f"f({i}) = {val} outside [{i}, {n - 1}]")
        if i > 1 and val < f[i - 2]:
            raise ValueError("f must be non-decreasing")
    rel = {(i, j) for i, val in enumerate(f, start=1) for j in range(val + 2, n + 1)}
    return Poset(n, frozenset(rel))


def enumerate_irreducible_nuio(n: int) -> Iterator[Poset]:
    for f in admissible_functions(n):
        yield unit_interval_order(f, n)


def enumerate_nuio(n: int) -> Iterator[Poset]:
    """All natural unit interval orders on [n] (irreducible or not).

    Element i lies below exactly g(i), ..., n for a non-decreasing g with g(i) > i.
    """
    def rec(i: int, lo: int, acc: list[int]) -> Iterator[tuple[int, ...]]:
        if i > n:
            yield tuple(acc)
            return
        for val in range(max(lo, i + 1), n + 2):
            acc.append(val)
            yield from rec(i + 1, val, acc)
            acc.pop()

    for g in rec(1, 1, []):
        yield Poset(n, frozenset((i, j) for i, gi in enumerate(g, start=1) for j in range(gi, n + 1)))


def is_natural_unit_interval_digraph(X: Digraph) -> bool:
    """(j, k) in E implies (i, l) in E whenever i <= j <= k <= l."""
    n = X.n
    for j, k in X.arcs:
        if j > k:
            return False
        for i in range(1, j + 1):
            for l in range(k, n + 1):
                if (i, l) not in X.arcs:
                    return False
    return True


def is_free(P: Poset, a: int, b: int) -> bool:
    """True iff P has no induced copy of (a-chain) + (b-chain)."""
    def is_chain(S: Sequence[int]) -> bool:
        return all(P.comparable(x, y) for x, y in itertools.combinations(S, 2))

    for S in itertools.combinations(range(1, P.n + 1), a + b):
        for A in itertools.combinations(S, a):
            B = [x for x in S if x not in A]
            if is_chain(A) and is_chain(B) and all(not P.comparable(x, y) for x in A for y in B):
                return False
    return True


def is_unit_interval_order(P: Poset) -> bool:
    return is_free(P, 3, 1) and is_free(P, 2, 2)


# --------------------------------------------------------------------------
# enumeration, canonical forms, connectivity


def _order_ideals(P: Poset) -> Iterator[frozenset[int]]:
    for mask in range(1 << P.n):
        S = frozenset(v for v in range(1, P.n + 1) if mask >> (v - 1) & 1)
        if all(u in S for u, v in P.strict if v in S):
            yield S


def _order_filters(P: Poset) -> Iterator[frozenset[int]]:
    for mask in range(1 << P.n):
        S = frozenset(v for v in range(1, P.n + 1) if mask >> (v - 1) & 1)
        if all(v in S for u, v in P.strict if u in S):
            yield S


def _labeled_posets(n: int) -> Iterator[Poset]:
    if n == 0:
        yield Poset(0)
        return
    for P in _labeled_posets(n - 1):
        ideals = list(_order_ideals(P))
        filters = list(_order_filters(P))
        for D in ideals:
            for U in filters:
                if D & U or any((d, u) not in P.strict for d in D for u in U):
                    continue
                rel = set(P.strict) | {(d, n) for d in D} | {(n, u) for u in U}
                yield Poset(n, frozenset(rel))


def _iso_posets(n: int) -> list[Poset]:
    reps = [Poset(0)]
    for k in range(1, n + 1):
        seen: dict[Any, Poset] = {}
        for P in reps:
            for D in _order_ideals(P):
                Q = Poset(k, P.strict | {(d, k) for d in D})
                seen.setdefault(canonical_form(Q), Q)
        reps = [seen[key] for key in sorted(seen)]
    return reps


def enumerate_posets(n: int, up_to_iso: bool = False) -> Iterator[Poset]:
    """Labeled posets on [n], or one representative per isomorphism class.

    Labeled posets are built element by element: the new element n gets a
    down-set D and an up-set U with D entirely below U.  Representatives are
    built by adjoining a new maximal element over every order ideal of each
    smaller representative and keeping the first poset of each canonical form.
    """
    if up_to_iso:
        yield from _iso_posets(n)
    else:
        yield from _labeled_posets(n)


def _refined_colors(n: int, out_nb: Mapping[int, frozenset[int]], in_nb: Mapping[int, frozenset[int]],
                    loops: frozenset[int]) -> dict[int, int]:
    color = {v: (len(out_nb[v]), len(in_nb[v]), v in loops) for v in range(1, n + 1)}
    while True:
        sig = {
            v: (color[v], tuple(sorted(color[w] for w in out_nb[v])), tuple(sorted(color[w] for w in in_nb[v])))
            for v in range(1, n + 1)
        }
        palette = {s: i for i, s in enumerate(sorted(set(sig.values())))}
        new = {v: palette[sig[v]] for v in range(1, n + 1)}
        if len(set(new.values())) == len(set(color.values())):
            return new
        color = new  # type: ignore[assignment]


def _canonical_arcs(n: int, arcs: frozenset[Arc]) -> int:
    out_nb: dict[int, set[int]] = {v: set() for v in range(1, n + 1)}
    in_nb: dict[int, set[int]] = {v: set() for v in range(1, n + 1)}
    loops = set()
    for u, v in arcs:
        if u == v:
            loops.add(u)
        else:
            out_nb[u].add(v)
            in_nb[v].add(u)
    color = _refined_colors(n, {k: frozenset(s) for k, s in out_nb.items()},
                            {k: frozenset(s) for k, s in in_nb.items()}, frozenset(loops))
    classes: dict[int, list[int]] = {}
    for v in range(1, n + 1):
        classes.setdefault(color[v], []).append(v)
    groups = [classes[c] for c in sorted(classes)]
    best = None
    for choice in itertools.product(*(itertools.permutations(g) for g in groups)):
        label, nxt = {}, 0
        for grp in choice:
            for v in grp:
                label[v] = nxt
                nxt += 1
        code = 0
        for u, v in arcs:
            code |= 1 << (label[u] * n + label[v])
        if best is None or code < best:
            best = code
    return best or 0


def canonical_form(X: Structure) -> tuple[str, int, int]:
    """Isomorphism-invariant encoding ``(kind, n, code)``.

    ``code`` is the minimum adjacency bitmask over all relabellings that list
    vertices in order of a refined degree colouring.  Two structures of the
    same kind are isomorphic iff their canonical forms agree.
    """
    if isinstance(X, Graph):
        arcs = X.edges | frozenset((v, u) for u, v in X.edges)
        return "graph", X.n, _canonical_arcs(X.n, arcs)
    if isinstance(X, Digraph):
        return "digraph", X.n, _canonical_arcs(X.n, X.arcs)
    return "poset", X.n, _canonical_arcs(X.n, X.strict)


def is_isomorphic(X: Structure, Y: Structure) -> bool:
    return type(X) is type(Y) and canonical_form(X) == canonical_form(Y)


def is_irreducible(P: Poset) -> bool:
    """Not an ordinal sum of two nonempty posets.

    Any ordinal-sum split puts the lower part first in every linear
    extension, so testing the prefixes of one linear extension suffices.
    """
    if P.n <= 1:
        return P.n == 1
    sigma = next(linear_extensions(P))
    for i in range(1, P.n):
        low, high = sigma[:i], sigma[i:]
        if all((a, b) in P.strict for a in low for b in high):
            return False
    return True


def is_connected(G: Graph) -> bool:
    if G.n == 0:
        return False
    seen, stack = {1}, [1]
    while stack:
        v = stack.pop()
        for w in G.adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == G.n


def graphs(n: int) -> Iterator[Graph]:
    """All labeled simple graphs on [n]."""
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    for mask in range(1 << len(pairs)):
        yield Graph(n, frozenset(p for k, p in enumerate(pairs) if mask >> k & 1))


def digraphs(n: int, loops: bool = False) -> Iterator[Digraph]:
    """All labeled digraphs on [n] (loopless unless ``loops``)."""
    pairs = [(u, v) for u in range(1, n + 1) for v in range(1, n + 1) if loops or u != v]
    for mask in range(1 << len(pairs)):
        yield Digraph(n, frozenset(p for k, p in enumerate(pairs) if mask >> k & 1))


# --------------------------------------------------------------------------
# statistics


def _max_subset(n: int, ok) -> int:
    best = 0
    for r in range(n, 0, -1):
        if any(ok(S) for S in itertools.combinations(range(1, n + 1), r)):
            return r
    return best


def incomparability_number(P: Poset) -> int:
    """i(P): size of a largest antichain."""
    return _max_subset(P.n, lambda S: all(not P.comparable(x, y) for x, y in itertools.combinations(S, 2)))


def chain_number(P: Poset) -> int:
    """c(P): size of a longest chain."""
    return _max_subset(P.n, lambda S: all(P.comparable(x, y) for x, y in itertools.combinations(S, 2)))


def clique_number(G: Graph) -> int:
    return _max_subset(G.n, lambda S: all(G.has_edge(x, y) for x, y in itertools.combinations(S, 2)))


def independence_number(G: Graph) -> int:
    return _max_subset(G.n, lambda S: all(not G.has_edge(x, y) for x, y in itertools.combinations(S, 2)))


def chromatic_number(G: Graph) -> int:
    """Least m admitting a proper m-colouring: the fewest blocks in a stable partition."""
    if G.n == 0:
        return 0
    return min(len(pi) for pi in stable_partitions(G))


@dataclass(frozen=True)
class Statistics:
    incomparability: int
    chain: int
    clique: int
    independence: int
    chromatic: int


def statistics(P: Poset) -> Statistics:
    """i(P), c(P) and the clique / independence / chromatic numbers of inc(P)."""
    G = inc(P)
    return Statistics(incomparability_number(P), chain_number(P), clique_number(G),
                      independence_number(G), chromatic_number(G))


# --------------------------------------------------------------------------
# broken circuits


def graph_cycles(G: Graph) -> list[frozenset[Arc]]:
    """Every cycle of G, as a set of edges."""
    out = []
    adj = G.adj
    for s in range(1, G.n + 1):
        path = [s]

        def rec(v: int) -> None:
            for w in adj[v]:
                if w == s and len(path) >= 3 and path[1] < path[-1]:
                    cyc = path + [s]
                    out.append(frozenset((min(a, b), max(a, b)) for a, b in zip(cyc, cyc[1:])))
                elif w > s and w not in path:
                    path.append(w)
                    rec(w)
                    path.pop()

        rec(s)
    return out


def default_labeling(G: Graph) -> dict[Arc, int]:
    return {e: k for k, e in enumerate(sorted(G.edges), start=1)}


def component_sizes(n: int, edges: Iterable[Arc]) -> tuple[int, ...]:
    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        parent[find(u)] = find(v)
    sizes: dict[int, int] = {}
    for v in range(1, n + 1):
        r = find(v)
        sizes[r] = sizes.get(r, 0) + 1
    return tuple(sorted(sizes.values(), reverse=True))


def broken_cycle_complex(G: Graph, labeling: Mapping[Arc, int] | None = None
                         ) -> Iterator[tuple[frozenset[Arc], tuple[int, ...]]]:
    """Edge sets containing no broken cycle, each with its component-size partition."""
    lab = dict(labeling) if labeling is not None else default_labeling(G)
    lab = {(min(e), max(e)): k for e, k in lab.items()}
    if set(lab) != set(G.edges) or sorted(lab.values()) != list(range(1, len(G.edges) + 1)):
        raise ValueError("labeling must be a bijection from the edges to 1..|E|")
    edges = sorted(G.edges)
    index = {e: k for k, e in enumerate(edges)}
    broken = []
    for cyc in graph_cycles(G):
        top = max(cyc, key=lab.__getitem__)
        broken.append(sum(1 << index[e] for e in cyc if e != top))
    for mask in range(1 << len(edges)):
        if any(b & mask == b for b in broken):
            continue
        S = frozenset(e for k, e in enumerate(edges) if mask >> k & 1)
        yield S, component_sizes(G.n, S)
