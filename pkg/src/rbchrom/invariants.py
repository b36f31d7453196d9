"""Chromatic and Redei-Berge invariants, commutative and noncommutative.

X_G and Y_G come from stable set partitions, U_X from X-descent sets of
listings, W_X from friendly listings.  Slow definitional versions are kept
next to the fast ones so tests can use them as oracles.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Iterable, Mapping, Sequence

from .core import SetPartition, mult_factorial, set_partitions
from .ncsym import NCSymElement, congruence_collapse, induct, sn_action
from .structures import (
    Digraph,
    Graph,
    Poset,
    broken_cycle_complex,
    contract_edge,
    delete_edge,
    digraph_of,
    discrete_digraph,
    inc,
    move_to_end,
    product,
    relabel,
    stable_partition_counts,
    stable_partitions,
)
from .symfn import (
    Positivity,
    QSymElement,
    SymElement,
    UniPolynomial,
    positivity,
    principal_specialization,
    project_qsym_to_sym,
)


@lru_cache(maxsize=None)
def _listings(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(itertools.permutations(range(1, n + 1)))


# --------------------------------------------------------------------------
# chromatic symmetric function


def chromatic_sym(G: Graph) -> SymElement:
    """X_G in the monomial basis: a_mu * r_1(mu)! r_2(mu)! ... per type mu."""
    return SymElement(G.n, "m", {
        mu: count * mult_factorial(mu) for mu, count in stable_partition_counts(G).items()
    })


def proper_colorings(G: Graph, m: int) -> Iterable[tuple[int, ...]]:
    for f in itertools.product(range(1, m + 1), repeat=G.n):
        if all(f[u - 1] != f[v - 1] for u, v in G.edges):
            yield f


def chromatic_sym_by_colorings(G: Graph) -> SymElement:
    """X_G read off proper colourings with n colours: [m_lam] = #colourings with content lam."""
    out: dict[tuple[int, ...], int] = {}
    for f in proper_colorings(G, G.n):
        content = [f.count(c) for c in range(1, G.n + 1)]
        while content and content[-1] == 0:
            content.pop()
        if all(a >= b for a, b in zip(content, content[1:])) and all(content):
            lam = tuple(content)
            out[lam] = out.get(lam, 0) + 1
    return SymElement(G.n, "m", out)


def chromatic_broken_cycle(G: Graph, labeling: Mapping[tuple[int, int], int] | None = None) -> SymElement:
    """X_G = sum over S in B_G of (-1)^|S| p_lambda(S)."""
    out: dict[tuple[int, ...], int] = {}
    for S, lam in broken_cycle_complex(G, labeling):
        out[lam] = out.get(lam, 0) + (-1) ** len(S)
    return SymElement(G.n, "p", out)


def chromatic_poly(G: Graph) -> UniPolynomial:
    return principal_specialization(chromatic_sym(G))


# --------------------------------------------------------------------------
# Redei-Berge function


def descent_histogram(X: Digraph) -> dict[frozenset[int], int]:
    """Number of listings of V per X-descent set."""
    arcs = X.arcs
    n = X.n
    hist: dict[frozenset[int], int] = {}
    for sigma in _listings(n):
        d = frozenset(i for i in range(1, n) if (sigma[i - 1], sigma[i]) in arcs)
        hist[d] = hist.get(d, 0) + 1
    return hist


def redei_berge(X: Digraph) -> QSymElement:
    """U_X in the fundamental basis of QSym."""
    return QSymElement(X.n, "F", descent_histogram(X))


def redei_berge_sym(X: Digraph) -> SymElement:
    """U_X in the monomial basis of Sym."""
    return project_qsym_to_sym(redei_berge(X))


def poset_redei_berge(P: Poset) -> SymElement:
    return redei_berge_sym(digraph_of(P))


def redei_berge_poly(X: Digraph) -> UniPolynomial:
    return principal_specialization(redei_berge(X))


def poset_ascent_quasisym(P: Poset) -> QSymElement:
    """sum over listings of F_{A_P(sigma)}, A_P(sigma) = {i : sigma_i not <=_P sigma_{i+1}}."""
    hist: dict[frozenset[int], int] = {}
    for sigma in _listings(P.n):
        a = frozenset(i for i in range(1, P.n) if not P.leq(sigma[i - 1], sigma[i]))
        hist[a] = hist.get(a, 0) + 1
    return QSymElement(P.n, "F", hist)


def _cycles(perm: Sequence[int]) -> list[tuple[int, ...]]:
    n = len(perm)
    seen = [False] * (n + 1)
    out = []
    for s in range(1, n + 1):
        if seen[s]:
            continue
        cyc, v = [], s
        while not seen[v]:
            seen[v] = True
            cyc.append(v)
            v = perm[v - 1]
        out.append(tuple(cyc))
    return out


def cycle_census(X: Digraph) -> Iterable[tuple[tuple[int, ...], int]]:
    """(type, phi) for permutations of V whose every cycle is a cycle of X or of its complement.

    A cycle c_1 -> c_2 -> ... -> c_k -> c_1 lies in X when every (c_i, c_{i+1})
    is an arc; fixed points need a loop.  phi sums len - 1 over the cycles lying in X.
    """
    arcs = X.arcs
    for perm in _listings(X.n):
        phi, ok = 0, True
        cycles = _cycles(perm)
        for cyc in cycles:
            k = len(cyc)
            hits = sum((cyc[i], cyc[(i + 1) % k]) in arcs for i in range(k))
            if hits == k:
                phi += k - 1
            elif hits:
                ok = False
                break
        if ok:
            yield tuple(sorted((len(c) for c in cycles), reverse=True)), phi


def redei_berge_p_expansion(X: Digraph) -> SymElement:
    """U_X = sum over the cycle census of (-1)^phi p_type."""
    out: dict[tuple[int, ...], int] = {}
    for lam, phi in cycle_census(X):
        out[lam] = out.get(lam, 0) + (-1) ** phi
    return SymElement(X.n, "p", out)


# --------------------------------------------------------------------------
# noncommutative lifts


def Y_chromatic(G: Graph) -> NCSymElement:
    """Y_G = sum of m_pi over stable set partitions pi."""
    return NCSymElement(G.n, "m", {pi: 1 for pi in stable_partitions(G)})


def Y_by_words(G: Graph) -> NCSymElement:
    """Y_G from proper colourings with n colours; each colour kernel contributes m_kernel once."""
    kernels = {SetPartition.from_labels(f) for f in proper_colorings(G, G.n)}
    return NCSymElement(G.n, "m", {pi: 1 for pi in kernels})


def _descent_free_listings(X: Digraph, block: Sequence[int]) -> int:
    arcs = X.arcs
    return sum(
        1 for s in itertools.permutations(block)
        if not any((s[i], s[i + 1]) in arcs for i in range(len(s) - 1))
    )


def W_redei(X: Digraph) -> NCSymElement:
    """W_X in the monomial basis.

    With colour j on the j-th block of pi, a friendly listing runs through the
    blocks in order and lists each block without an X-descent, so the
    coefficient of m_pi is a product over blocks.
    """
    nu: dict[tuple[int, ...], int] = {}
    out: dict[SetPartition, int] = {}
    for pi in set_partitions(X.n):
        c = 1
        for b in pi.blocks:
            if b not in nu:
                nu[b] = _descent_free_listings(X, b)
            c *= nu[b]
            if not c:
                break
        if c:
            out[pi] = c
    return NCSymElement(X.n, "m", out)


def poset_W(P: Poset) -> NCSymElement:
    return W_redei(digraph_of(P))


def friendly_listings(X: Digraph, f: Sequence[int]) -> int:
    """Listings sigma with f weakly increasing along sigma and strictly across every arc."""
    arcs = X.arcs
    count = 0
    for s in _listings(X.n):
        ok = True
        for i in range(X.n - 1):
            a, b = f[s[i] - 1], f[s[i + 1] - 1]
            if a > b or (a == b and (s[i], s[i + 1]) in arcs):
                ok = False
                break
        if ok:
            count += 1
    return count


def W_by_words(X: Digraph) -> tuple[NCSymElement, bool]:
    """W_X from every colouring f: [n] -> [n].

    Returns the element built from the canonical colouring of each kernel and
    whether every colouring with that kernel gave the same count.
    """
    counts: dict[SetPartition, set[int]] = {}
    for f in itertools.product(range(1, X.n + 1), repeat=X.n):
        counts.setdefault(SetPartition.from_labels(f), set()).add(friendly_listings(X, f))
    consistent = all(len(v) == 1 for v in counts.values())
    return NCSymElement(X.n, "m", {pi: max(v) for pi, v in counts.items()}), consistent


# --------------------------------------------------------------------------
# deletion-contraction


@dataclass(frozen=True)
class IdentityCheck:
    """Both sides of an identity, and the first key where they differ (if any)."""

    holds: bool
    lhs: Any
    rhs: Any
    witness: Any = None


def compare(lhs: Any, rhs: Any) -> IdentityCheck:
    if lhs == rhs:
        return IdentityCheck(True, lhs, rhs)
    diff = lhs - rhs
    key = diff.sorted_items()[0][0] if hasattr(diff, "sorted_items") else None
    return IdentityCheck(False, lhs, rhs, key)


def deletion_contraction_W(X: Digraph, e: tuple[int, int]) -> IdentityCheck:
    """W_X = W_{X minus e} - W_{X/e} induced, after moving e to (n-1, n).

    Also confirms that relabelling commutes with W: delta(W_X) = W_{delta(X)}.
    """
    u, v = e
    if (u, v) not in X.arcs:
        raise ValueError(f"{e} is not an arc")
    if u == v:
        raise ValueError("cannot contract a loop")
    n = X.n
    delta = move_to_end(n, u, v)
    Xd = relabel(X, delta)
    lhs = W_redei(Xd)
    if sn_action(delta, W_redei(X)) != lhs:
        return IdentityCheck(False, lhs, sn_action(delta, W_redei(X)), "relabelling")
    ed = (n - 1, n)
    rhs = W_redei(delete_edge(Xd, ed)) - induct(W_redei(contract_edge(Xd, ed)))
    return compare(lhs, rhs)


def deletion_contraction_Y(G: Graph, e: tuple[int, int]) -> IdentityCheck:
    """Y_G = Y_{G minus e} - Y_{G/e} induced, after moving e to {n-1, n}."""
    u, v = sorted(e)
    if not G.has_edge(u, v):
        raise ValueError(f"{e} is not an edge")
    n = G.n
    delta = move_to_end(n, u, v)
    Gd = relabel(G, delta)
    lhs = Y_chromatic(Gd)
    if sn_action(delta, Y_chromatic(G)) != lhs:
        return IdentityCheck(False, lhs, sn_action(delta, Y_chromatic(G)), "relabelling")
    ed = (n - 1, n)
    rhs = Y_chromatic(delete_edge(Gd, ed)) - induct(Y_chromatic(contract_edge(Gd, ed)))
    return compare(lhs, rhs)


# --------------------------------------------------------------------------
# h-positivity construction


@dataclass(frozen=True)
class HStep:
    """Result of one h-positivity construction step.

    ``classes_positive`` is the verdict: the h-coefficients of W, summed over
    each congruence class mod the new last vertex, are all nonnegative.
    ``literal`` tests the raw NCSym h-coefficients, which can be negative.
    """

    digraph: Digraph
    classes_positive: bool
    negative_class: Any
    literal: Positivity

    def __bool__(self) -> bool:
        return self.classes_positive


def h_class_positivity(W: NCSymElement, i: int) -> tuple[bool, Any]:
    sums = congruence_collapse(W, i)
    bad = sorted(k for k, v in sums.items() if v < 0)
    return (not bad), (bad[0] if bad else None)


def h_positivity_step(X: Digraph) -> HStep:
    """(X . T_1) with the arc (n, n+1) removed, and the h-positivity of its W.

    Requires the last vertex of X to have no outgoing arcs.
    """
    n = X.n
    if n == 0 or X.succ[n]:
        raise ValueError(f"vertex {n} must exist and have no outgoing arcs")
    Y = delete_edge(product(X, discrete_digraph(1)), (n, n + 1))
    W = W_redei(Y)  # type: ignore[arg-type]
    ok, bad = h_class_positivity(W, n + 1)
    return HStep(Y, ok, bad, positivity(W, "h"))  # type: ignore[arg-type]


def iterate_h_steps(X: Digraph, steps: int) -> list[HStep]:
    out = []
    for _ in range(steps):
        step = h_positivity_step(X)
        out.append(step)
        X = step.digraph
    return out


def path_seed(n: int) -> Digraph:
    """Digraph whose incomparability graph is the path on n vertices (n >= 2)."""
    if n < 2:
        raise ValueError("paths start at two vertices")
    return iterate_h_steps(discrete_digraph(1), n - 1)[-1].digraph


def lollipop_seed(clique: int, tail: int) -> Digraph:
    """Digraph whose incomparability graph is K_clique with a path of ``tail`` edges attached."""
    if clique < 1:
        raise ValueError("clique must be nonempty")
    X = discrete_digraph(clique)
    if tail:
        X = iterate_h_steps(X, tail)[-1].digraph
    return X


# --------------------------------------------------------------------------
# assorted poset checks


def incomparable_triples(P: Poset) -> int:
    return sum(
        1 for a, b, c in itertools.combinations(range(1, P.n + 1), 3)
        if not (P.comparable(a, b) or P.comparable(a, c) or P.comparable(b, c))
    )


def inc_chromatic(P: Poset) -> SymElement:
    return chromatic_sym(inc(P))


def coefficient(f: SymElement, basis: str, lam: Sequence[int]) -> Fraction:
    return f.to(basis)[tuple(lam)]


def cycle_permutation_types(X: Digraph) -> dict[tuple[int, ...], int]:
    """Cycle types of the permutations of V all of whose cycles are cycles of X."""
    arcs = X.arcs
    out: dict[tuple[int, ...], int] = {}
    for perm in _listings(X.n):
        if all((v, perm[v - 1]) in arcs for v in range(1, X.n + 1)):
            lam = tuple(sorted((len(c) for c in _cycles(perm)), reverse=True))
            out[lam] = out.get(lam, 0) + 1
    return out


def broken_cycle_types(G: Graph, labeling: Mapping[tuple[int, int], int] | None = None) -> dict[tuple[int, ...], int]:
    out: dict[tuple[int, ...], int] = {}
    for _, lam in broken_cycle_complex(G, labeling):
        out[lam] = out.get(lam, 0) + 1
    return out
