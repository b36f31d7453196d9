"""Named verification suites and searches, shared by the CLI and the tests.

A suite is a generator of ``Instance`` records for every structure up to a
size bound.  Suites are deterministic given ``(n, seed)``.
"""

from __future__ import annotations

import json
import random
from itertools import combinations
from dataclasses import dataclass
from typing import Any, Callable, Iterator

from .core import mult_factorial, partitions, set_partitions
from .decomp import (
    N_count,
    bag_redei_berge,
    breakdown_by_deletion,
    cover_at_zero,
    generalized_triple_deletion,
    linear_breakdown,
    omega_U_bag,
    path_cover_counts,
    path_cycle_x0,
    stable_partition_count_from_breakdown,
    u_bag_closed_form,
    u_from_path_covers,
    xi_by_chains,
)
from .invariants import (
    W_redei,
    Y_chromatic,
    broken_cycle_types,
    chromatic_broken_cycle,
    chromatic_poly,
    chromatic_sym,
    cycle_permutation_types,
    deletion_contraction_W,
    deletion_contraction_Y,
    descent_histogram,
    incomparable_triples,
    poset_ascent_quasisym,
    redei_berge_p_expansion,
    redei_berge_poly,
    redei_berge_sym,
)
from .ncsym import check_induction_theorem, omega_ncsym, rho
from .structures import (
    Digraph,
    Graph,
    Poset,
    bag_of_sticks,
    bag_type,
    canonical_form,
    chain_number,
    chromatic_number,
    clique_number,
    comparability,
    complement,
    complete_multipartite,
    default_labeling,
    digraph_of,
    digraphs,
    enumerate_nuio,
    enumerate_posets,
    extension_counts,
    graphs,
    hamiltonian_cycles,
    hamiltonian_paths,
    inc,
    incomparability_number,
    independence_number,
    is_connected,
    is_free,
    is_irreducible,
    opposite,
    stable_partition_counts,
    tournaments,
)
from .symfn import QSymElement, SymElement, omega_sym, positivity, project_qsym_to_sym


@dataclass(frozen=True)
class Instance:
    label: str
    ok: bool
    detail: str = ""


def label(X: Any) -> str:
    kind = type(X).__name__.lower()
    return f"{kind} {json.dumps(X.to_json(), separators=(',', ':'))}"


def _iso_posets(n: int) -> Iterator[Poset]:
    for k in range(1, n + 1):
        yield from enumerate_posets(k, up_to_iso=True)


def _labeled_posets(n: int) -> Iterator[Poset]:
    for k in range(1, n + 1):
        yield from enumerate_posets(k)


# --------------------------------------------------------------------------
# suites


def suite_omega_bridge(n: int, seed: int) -> Iterator[Instance]:
    """X_{inc(P)} = omega(U_P); sum of F_{A_P(sigma)} = X_{inc(P)}; [e_lam]X = [h_lam]U."""
    for P in _iso_posets(n):
        X = chromatic_sym(inc(P))
        U = redei_berge_sym(digraph_of(P))
        ok = X == omega_sym(U)
        ok = ok and project_qsym_to_sym(poset_ascent_quasisym(P)) == X
        ok = ok and X.to("e").coeffs == U.to("h").coeffs
        yield Instance(label(P), ok)


def suite_ncsym_bridge(n: int, seed: int) -> Iterator[Instance]:
    """Y_{inc(P)} = omega(W_P), rho(W_P) = U_P and rho(Y_{inc(P)}) = X_{inc(P)}."""
    for P in _labeled_posets(n):
        G, D = inc(P), digraph_of(P)
        Y, W = Y_chromatic(G), W_redei(D)
        ok = Y == omega_ncsym(W)
        ok = ok and rho(W) == redei_berge_sym(D) and rho(Y) == chromatic_sym(G)
        yield Instance(label(P), ok)


def suite_del_con_W(n: int, seed: int) -> Iterator[Instance]:
    for k in range(2, n + 1):
        for X in digraphs(k):
            for e in sorted(X.arcs):
                res = deletion_contraction_W(X, e)
                yield Instance(f"{label(X)} e={list(e)}", res.holds, "" if res.holds else str(res.witness))


def suite_del_con_Y(n: int, seed: int) -> Iterator[Instance]:
    for k in range(2, n + 1):
        for G in graphs(k):
            for e in sorted(G.edges):
                res = deletion_contraction_Y(G, e)
                yield Instance(f"{label(G)} e={list(e)}", res.holds, "" if res.holds else str(res.witness))


def random_digraph(n: int, rng: random.Random, loops: bool = False) -> Digraph:
    pairs = [(u, v) for u in range(1, n + 1) for v in range(1, n + 1) if loops or u != v]
    return Digraph(n, frozenset(p for p in pairs if rng.random() < 0.5))


def p_expansion_instances(n: int, seed: int, samples: int = 200, exhaustive_to: int = 4) -> Iterator[Digraph]:
    for k in range(1, min(n, exhaustive_to) + 1):
        yield from digraphs(k)
    rng = random.Random(seed)
    for k in range(exhaustive_to + 1, n + 1):
        for _ in range(samples):
            yield random_digraph(k, rng)


def suite_p_expansion(n: int, seed: int) -> Iterator[Instance]:
    """Cycle-census p-expansion equals the listing definition (exhaustive to 4, then 200 samples per size)."""
    for X in p_expansion_instances(n, seed):
        yield Instance(label(X), redei_berge_p_expansion(X) == redei_berge_sym(X))


def three_labelings(G: Graph, rng: random.Random) -> list[dict[tuple[int, int], int]]:
    edges = sorted(G.edges)
    shuffled = edges[:]
    rng.shuffle(shuffled)
    return [
        default_labeling(G),
        {e: len(edges) - k for k, e in enumerate(edges)},
        {e: k for k, e in enumerate(shuffled, start=1)},
    ]


def suite_broken_cycle(n: int, seed: int) -> Iterator[Instance]:
    rng = random.Random(seed)
    for k in range(1, n + 1):
        for G in graphs(k):
            X = chromatic_sym(G)
            ok = all(chromatic_broken_cycle(G, lab) == X for lab in three_labelings(G, rng))
            yield Instance(label(G), ok)


def suite_parity_redei(n: int, seed: int) -> Iterator[Instance]:
    """Tournaments (up to 5 vertices) have odd path counts; non-chain posets have even
    quasi-linear extension counts equal to u_P(1)."""
    for k in range(1, min(n, 5) + 1):
        for T in tournaments(k):
            yield Instance(label(T), hamiltonian_paths(T) % 2 == 1)
    for P in _iso_posets(n):
        if P.is_chain():
            continue
        lin, quasi = extension_counts(P)
        u1 = redei_berge_poly(digraph_of(P))(1)
        yield Instance(label(P), quasi % 2 == 0 and u1 == quasi and lin <= quasi)


def suite_polynomial_antipode(n: int, seed: int) -> Iterator[Instance]:
    """u_X(m) = (-1)^|V| u_{Xbar}(-m) for all digraphs (loops allowed, up to 4 vertices);
    chi_{inc(P)}(m) = (-1)^|P| u_P(-m) and i(P) = min{m : u_P(-m) != 0} for posets."""
    for k in range(1, min(n, 4) + 1):
        for X in digraphs(k, loops=True):
            lhs = redei_berge_poly(X)
            rhs = redei_berge_poly(complement(X)).reflect().scale((-1) ** k)  # type: ignore[arg-type]
            yield Instance(label(X), lhs == rhs)
    for P in _iso_posets(n):
        u = redei_berge_poly(digraph_of(P))
        chi = chromatic_poly(inc(P))
        ok = chi == u.reflect().scale((-1) ** P.n)
        first = next(m for m in range(0, P.n + 1) if u(-m) != 0)
        yield Instance(label(P), ok and first == incomparability_number(P))


def breakdown_instances(n: int, max_edges: int = 6) -> Iterator[Digraph]:
    """Loopless non-bag digraphs with at most ``max_edges`` arcs."""
    for k in range(1, n + 1):
        pairs = [(u, v) for u in range(1, k + 1) for v in range(1, k + 1) if u != v]
        for r in range(1, min(max_edges, len(pairs)) + 1):
            for arcs in combinations(pairs, r):
                if bag_type(k, arcs) is None:
                    yield Digraph(k, frozenset(arcs))


def D2() -> Digraph:
    return Digraph(4, frozenset({(1, 2), (1, 3)}))


def D3() -> Digraph:
    return Digraph(4, frozenset({(1, 2), (1, 3), (1, 4)}))


def suite_breakdown(n: int, seed: int) -> Iterator[Instance]:
    """Breakdown reassembles U_X exactly; the deletion recursion and chain
    enumeration agree with the xi formula on graphs with at most 4 arcs."""
    yield Instance("example D2", linear_breakdown(D2()).grouped() == {(1, 1, 1, 1): -1, (2, 1, 1): 2})
    yield Instance("example D3", linear_breakdown(D3()).grouped() == {(1, 1, 1, 1): -2, (2, 1, 1): 3})
    for X in breakdown_instances(n):
        b = linear_breakdown(X)
        ok = b.reassemble_quasisym().coeffs == {k: v for k, v in descent_histogram(X).items()}
        if ok and len(X.arcs) <= 4:
            raw = {t.edges: t.coeff for t in b.terms if t.coeff}
            ok = raw == breakdown_by_deletion(X)
            ok = ok and all(xi_by_chains(t.edges, X) == (-1) ** (len(X.arcs) - len(t.edges)) * t.coeff
                            for t in b.terms)
        yield Instance(label(X), ok)


def suite_bag_corollaries(n: int, seed: int) -> Iterator[Instance]:
    for k in range(1, n + 1):
        for lam in partitions(k):
            U = bag_redei_berge(lam)
            ok = omega_U_bag(lam) == omega_sym(project_qsym_to_sym(U))
            ok = ok and u_bag_closed_form(lam) == redei_berge_poly(bag_of_sticks(lam))
            counts = path_cover_counts(bag_of_sticks(lam))
            ok = ok and all(counts.get(mu, 0) * mult_factorial(mu) == N_count(lam, mu) for mu in partitions(k))
            yield Instance(f"bag {list(lam)}", ok)
    for k in range(1, min(n, 4) + 1):
        for X in digraphs(k):
            ok = path_cycle_x0(X) == omega_sym(redei_berge_sym(X))
            u = redei_berge_poly(X)
            ok = ok and u_from_path_covers(X) == u and cover_at_zero(X) == u.reflect().scale((-1) ** k)
            yield Instance(label(X), ok)
    for P in _iso_posets(min(n, 5)):
        counts = stable_partition_counts(inc(P))
        ok = all(stable_partition_count_from_breakdown(P, mu) == counts.get(mu, 0) for mu in partitions(P.n))
        yield Instance(label(P), ok)


def suite_positivity_uio(n: int, seed: int) -> Iterator[Instance]:
    """Natural unit interval orders: U_P h- and s-positive, X_{inc(P)} e-positive,
    chi = omega on inc(P), i(P) >= |P| / c(P); (3+1)-free posets (up to 5) have s-positive U_P."""
    for k in range(1, n + 1):
        for P in enumerate_nuio(k):
            U = redei_berge_sym(digraph_of(P))
            G = inc(P)
            ok = bool(positivity(U, "h")) and bool(positivity(U, "s"))
            ok = ok and bool(positivity(chromatic_sym(G), "e"))
            ok = ok and chromatic_number(G) == clique_number(G)
            ok = ok and incomparability_number(P) * chain_number(P) >= P.n
            yield Instance(label(P), ok)
    for P in _iso_posets(min(n, 5)):
        if is_free(P, 3, 1):
            yield Instance("3+1-free " + label(P), bool(positivity(redei_berge_sym(digraph_of(P)), "s")))


def suite_induction_theorem(n: int, seed: int) -> Iterator[Instance]:
    for k in range(1, n + 1):
        for pi in set_partitions(k):
            ok, witness = check_induction_theorem(pi)
            yield Instance(f"pi {pi.encode()}", ok, "" if ok else str(witness))


def suite_triple_deletion(n: int, seed: int) -> Iterator[Instance]:
    """Every element v and every set of at least two elements it covers."""
    for P in _iso_posets(n):
        for v in range(1, P.n + 1):
            below = [u for u in range(1, P.n + 1) if P.is_covering(u, v)]
            for r in range(2, len(below) + 1):
                for us in combinations(below, r):
                    rep = generalized_triple_deletion(P, v, us)
                    detail = f"empty-set variant balances: {rep.empty_set_variant_balances}"
                    yield Instance(f"{label(P)} v={v} u={list(us)}", rep.holds, detail)


def suite_equinumerosity(n: int, seed: int) -> Iterator[Instance]:
    """#{S in B_{inc(P)} : lambda(S) = lam} = #{pi in S_V(Dbar_P) : type(pi) = lam}."""
    for P in _iso_posets(n):
        lhs = broken_cycle_types(inc(P))
        rhs = cycle_permutation_types(complement(digraph_of(P)))  # type: ignore[arg-type]
        yield Instance(label(P), lhs == rhs)


def suite_statistics(n: int, seed: int) -> Iterator[Instance]:
    """Structural facts: inc(P) connected iff P irreducible iff complement(D_P) has a
    Hamiltonian cycle; i(P) = omega(inc P), c(P) = alpha(inc P); inc(P) is the complement
    of the comparability graph; D_P reversed is D of the dual; posets with equal U_P have
    equally many incomparable triples; complete multipartite graphs are told apart by X_G."""
    by_U: dict[Any, list[Poset]] = {}
    for P in _iso_posets(n):
        G = inc(P)
        irr = is_irreducible(P)
        ok = is_connected(G) == irr
        ok = ok and (hamiltonian_cycles(complement(digraph_of(P))) > 0) == irr  # type: ignore[arg-type]
        ok = ok and incomparability_number(P) == clique_number(G) and chain_number(P) == independence_number(G)
        ok = ok and G == complement(comparability(P))
        ok = ok and opposite(digraph_of(P)) == digraph_of(P.dual())
        by_U.setdefault(_key(redei_berge_sym(digraph_of(P))), []).append(P)
        yield Instance(label(P), ok)
    for key, group in sorted(by_U.items(), key=lambda kv: str(kv[0])):
        if len(group) > 1:
            triples = {incomparable_triples(P) for P in group}
            yield Instance("equal-U group " + " ".join(label(P) for P in group), len(triples) == 1)
    seen: dict[Any, tuple[int, ...]] = {}
    top = 7 if n >= 5 else n
    for k in range(1, top + 1):
        for lam in partitions(k):
            key = _key(chromatic_sym(complete_multipartite(lam)))
            clash = seen.get(key)
            yield Instance(f"multipartite {list(lam)}", clash is None, "" if clash is None else f"equals {list(clash)}")
            seen[key] = lam


def _key(f: SymElement | QSymElement) -> Any:
    return (f.degree, f.basis, tuple(sorted((str(k), v) for k, v in f.coeffs.items())))


@dataclass(frozen=True)
class Suite:
    run: Callable[[int, int], Iterator[Instance]]
    default: int
    limit: int


SUITES: dict[str, Suite] = {
    "omega-bridge": Suite(suite_omega_bridge, 5, 6),
    "ncsym-bridge": Suite(suite_ncsym_bridge, 4, 5),
    "del-con-W": Suite(suite_del_con_W, 3, 4),
    "del-con-Y": Suite(suite_del_con_Y, 4, 5),
    "p-expansion": Suite(suite_p_expansion, 4, 5),
    "broken-cycle": Suite(suite_broken_cycle, 5, 5),
    "parity-redei": Suite(suite_parity_redei, 5, 6),
    "polynomial-antipode": Suite(suite_polynomial_antipode, 5, 6),
    "breakdown": Suite(suite_breakdown, 4, 5),
    "bag-corollaries": Suite(suite_bag_corollaries, 6, 7),
    "positivity-uio": Suite(suite_positivity_uio, 6, 7),
    "induction-theorem": Suite(suite_induction_theorem, 4, 5),
    "triple-deletion": Suite(suite_triple_deletion, 5, 6),
    "equinumerosity": Suite(suite_equinumerosity, 5, 6),
    "statistics": Suite(suite_statistics, 5, 6),
}


def run_suite(name: str, n: int, seed: int = 0) -> list[Instance]:
    """All instances of a suite, ordered by label."""
    return sorted(SUITES[name].run(n, seed), key=lambda inst: inst.label)


# --------------------------------------------------------------------------
# searches


def _finding(P: Poset, pos: Any) -> dict[str, Any]:
    return {"structure": P.to_json(), "basis": pos.basis, "key": str(pos.certificate), "coeff": str(pos.coeff)}


def search_e_negative_uio(n: int) -> list[dict[str, Any]]:
    out = []
    for k in range(1, n + 1):
        for P in enumerate_nuio(k):
            pos = positivity(chromatic_sym(inc(P)), "e")
            if not pos:
                out.append(_finding(P, pos))
    return out


def search_h_negative_uio(n: int) -> list[dict[str, Any]]:
    out = []
    for k in range(1, n + 1):
        for P in enumerate_nuio(k):
            pos = positivity(redei_berge_sym(digraph_of(P)), "h")
            if not pos:
                out.append(_finding(P, pos))
    return out


def search_equal_U_posets(n: int) -> list[dict[str, Any]]:
    """Pairs of non-isomorphic posets of equal size with identical U_P (re-verified)."""
    out = []
    for k in range(1, n + 1):
        groups: dict[Any, list[tuple[Poset, SymElement]]] = {}
        for P in enumerate_posets(k, up_to_iso=True):
            U = redei_berge_sym(digraph_of(P))
            groups.setdefault(_key(U), []).append((P, U))
        for members in groups.values():
            for i in range(len(members)):
                for j in range(i + 1, len(members)):
                    (P, U), (Q, V) = members[i], members[j]
                    if U == V and canonical_form(P) != canonical_form(Q):
                        out.append({"first": P.to_json(), "second": Q.to_json(), "U": U.to_json()})
    return out


def search_equal_X_multipartite(n: int) -> list[dict[str, Any]]:
    out = []
    for k in range(1, n + 1):
        groups: dict[Any, list[tuple[tuple[int, ...], SymElement]]] = {}
        for lam in partitions(k):
            X = chromatic_sym(complete_multipartite(lam))
            groups.setdefault(_key(X), []).append((lam, X))
        for members in groups.values():
            for i in range(len(members)):
                for j in range(i + 1, len(members)):
                    if members[i][1] == members[j][1]:
                        out.append({"first": list(members[i][0]), "second": list(members[j][0])})
    return out


SEARCHES: dict[str, tuple[Callable[[int], list[dict[str, Any]]], int]] = {
    "e-negative-uio": (search_e_negative_uio, 7),
    "h-negative-uio": (search_h_negative_uio, 7),
    "equal-U-nonisomorphic-posets": (search_equal_U_posets, 6),
    "equal-X-nonisomorphic-complete-multipartite": (search_equal_X_multipartite, 9),
}
