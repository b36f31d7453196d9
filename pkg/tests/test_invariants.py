import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from rbchrom.core import SetPartition, partitions
from rbchrom.ncsym import NCSymElement, nc_basis_element, ncsym_multiply, omega_ncsym, rho, sn_action
from rbchrom.symfn import QSymElement, SymElement, UniPolynomial, basis_element, omega_qsym, omega_sym, positivity
from rbchrom.structures import (
    Digraph,
    Graph,
    Poset,
    complement,
    complete_multipartite,
    digraph_of,
    digraphs,
    discrete_digraph,
    enumerate_posets,
    extension_counts,
    graphs,
    inc,
    is_free,
    product,
    relabel,
    statistics,
)
from rbchrom.invariants import (
    W_by_words,
    W_redei,
    Y_by_words,
    Y_chromatic,
    broken_cycle_types,
    chromatic_broken_cycle,
    chromatic_poly,
    chromatic_sym,
    chromatic_sym_by_colorings,
    cycle_permutation_types,
    deletion_contraction_W,
    deletion_contraction_Y,
    descent_histogram,
    h_positivity_step,
    incomparable_triples,
    iterate_h_steps,
    lollipop_seed,
    path_seed,
    poset_ascent_quasisym,
    poset_W,
    proper_colorings,
    redei_berge,
    redei_berge_p_expansion,
    redei_berge_poly,
    redei_berge_sym,
)

SP = SetPartition.decode


def D(n, *arcs):
    return Digraph(n, frozenset(arcs))


def G(n, *edges):
    return Graph(n, frozenset(edges))


EDGE = D(2, (1, 2))
K3 = G(3, (1, 2), (1, 3), (2, 3))
PATH3 = G(3, (1, 2), (2, 3))


def random_digraph(rng, n, loops=False):
    pairs = [(u, v) for u in range(1, n + 1) for v in range(1, n + 1) if loops or u != v]
    return Digraph(n, frozenset(a for a in pairs if rng.random() < 0.5))


def posets_upto(n):
    for k in range(1, n + 1):
        yield from enumerate_posets(k, up_to_iso=True)


# --- chromatic symmetric function

def test_chromatic_sym_examples():
    assert chromatic_sym(K3) == SymElement(3, "m", {(1, 1, 1): 6})
    for n in range(1, 5):
        assert chromatic_sym(G(n)) == basis_element("p", (1,) * n)
    assert chromatic_sym(PATH3) == SymElement(3, "m", {(1, 1, 1): 6, (2, 1): 1})


@pytest.mark.parametrize("n", range(1, 5))
def test_chromatic_sym_against_colorings(n):
    for g in graphs(n):
        assert chromatic_sym(g) == chromatic_sym_by_colorings(g)


def test_chromatic_poly():
    assert chromatic_poly(K3) == UniPolynomial.falling(3)
    for g in itertools.islice(graphs(4), 0, None, 5):
        poly = chromatic_poly(g)
        for m in range(4):
            assert poly(m) == sum(1 for _ in proper_colorings(g, m))


# --- Redei-Berge function

def _u_by_listings(X):
    out = {}
    for s in itertools.permutations(range(1, X.n + 1)):
        key = frozenset(i for i in range(1, X.n) if (s[i - 1], s[i]) in X.arcs)
        out[key] = out.get(key, 0) + 1
    return QSymElement(X.n, "F", out)


def test_redei_berge_examples():
    assert redei_berge(EDGE) == QSymElement(2, "F", {frozenset(): 1, frozenset({1}): 1})
    assert redei_berge_sym(EDGE) == basis_element("p", (1, 1))
    for n in range(1, 5):
        assert redei_berge(discrete_digraph(n)).coeffs == {frozenset(): __import__("math").factorial(n)}
    assert redei_berge_poly(EDGE) == UniPolynomial([0, 0, 1])
    assert sum(descent_histogram(EDGE).values()) == 2


@pytest.mark.parametrize("n", range(1, 4))
def test_redei_berge_properties_exhaustive(n):
    for X in digraphs(n, loops=True):
        U = redei_berge(X)
        assert U == _u_by_listings(X)
        assert omega_qsym(U) == redei_berge(complement(X))
        u, ubar = redei_berge_poly(X), redei_berge_poly(complement(X))
        assert u == ubar.reflect().scale((-1) ** n)


def test_p_expansion_examples():
    assert redei_berge_p_expansion(EDGE) == basis_element("p", (1, 1))
    two_cycle = D(2, (1, 2), (2, 1))
    assert redei_berge_p_expansion(two_cycle) == SymElement(2, "p", {(1, 1): 1, (2,): -1})
    assert redei_berge_sym(two_cycle) == SymElement(2, "p", {(1, 1): 1, (2,): -1})


@pytest.mark.parametrize("n", range(1, 4))
def test_p_expansion_exhaustive_small(n):
    for X in digraphs(n, loops=True):
        assert redei_berge_p_expansion(X) == redei_berge_sym(X)


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 5), st.integers(0, 10 ** 6))
def test_p_expansion_random(n, seed):
    X = random_digraph(random.Random(seed), n, loops=True)
    assert redei_berge_p_expansion(X) == redei_berge_sym(X)


# --- broken circuits

def test_broken_cycle_expansion():
    forest = G(3, (1, 2), (2, 3))
    expected = SymElement(3, "p", {(1, 1, 1): 1, (2, 1): -2, (3,): 1})
    assert chromatic_broken_cycle(forest) == expected
    reverse = {(1, 2): 3, (1, 3): 2, (2, 3): 1}
    assert chromatic_broken_cycle(K3) == chromatic_broken_cycle(K3, reverse) == chromatic_sym(K3)


@pytest.mark.parametrize("n", range(1, 5))
def test_broken_cycle_matches_stable_partitions(n):
    for g in graphs(n):
        assert chromatic_broken_cycle(g) == chromatic_sym(g)


# --- posets

@pytest.mark.parametrize("n", range(1, 6))
def test_inc_chromatic_is_omega_of_u(n):
    for p in enumerate_posets(n, up_to_iso=True):
        X = chromatic_sym(inc(p))
        U = redei_berge_sym(digraph_of(p))
        assert X == omega_sym(U)
        assert omega_qsym(poset_ascent_quasisym(p)) == redei_berge(digraph_of(p))
        chi, u = chromatic_poly(inc(p)), redei_berge_poly(digraph_of(p))
        assert chi == u.reflect().scale((-1) ** n)
        for lam in partitions(n):
            assert X.to("e")[lam] == U.to("h")[lam]


@pytest.mark.parametrize("n", range(1, 7))
def test_parity_of_quasi_linear_extensions(n):
    for p in enumerate_posets(n, up_to_iso=True):
        _, quasi = extension_counts(p)
        assert redei_berge_poly(digraph_of(p))(1) == quasi
        if not p.is_chain():
            assert quasi % 2 == 0
        else:
            assert quasi == 1


@pytest.mark.parametrize("n", range(1, 6))
def test_incomparability_number_from_u(n):
    for p in enumerate_posets(n, up_to_iso=True):
        u = redei_berge_poly(digraph_of(p))
        first = next(m for m in range(n + 1) if u(-m) != 0)
        assert first == statistics(p).incomparability


@pytest.mark.parametrize("n", range(1, 6))
def test_broken_cycles_equinumerous_with_cycle_permutations(n):
    for p in enumerate_posets(n, up_to_iso=True):
        assert broken_cycle_types(inc(p)) == cycle_permutation_types(complement(digraph_of(p)))


def test_s_positivity_of_3_plus_1_free():
    for p in posets_upto(5):
        if is_free(p, 3, 1):
            assert positivity(redei_berge_sym(digraph_of(p)), "s").positive


def test_multipartite_graphs_are_distinguished():
    shapes = [lam for k in range(1, 8) for lam in partitions(k)]
    seen = {}
    for lam in shapes:
        key = chromatic_sym(complete_multipartite(lam))
        assert (key.degree, tuple(key.sorted_items())) not in seen
        seen[(key.degree, tuple(key.sorted_items()))] = lam


def test_equal_u_posets_share_incomparable_triples():
    for n in range(1, 6):
        groups = {}
        for p in enumerate_posets(n, up_to_iso=True):
            key = tuple(redei_berge(digraph_of(p)).sorted_items())
            groups.setdefault(key, set()).add(incomparable_triples(p))
        assert all(len(v) == 1 for v in groups.values())


# --- noncommutative lifts

def test_y_examples():
    for n in range(1, 5):
        kn = Graph(n, frozenset(itertools.combinations(range(1, n + 1), 2)))
        assert Y_chromatic(kn) == nc_basis_element("e", SetPartition.full(n)).to("m")
    assert Y_chromatic(G(2)) == NCSymElement(2, "m", {SP("12"): 1, SP("1/2"): 1})


@pytest.mark.parametrize("n", range(1, 5))
def test_y_against_words(n):
    for g in graphs(n):
        assert Y_chromatic(g) == Y_by_words(g)
        assert rho(Y_chromatic(g)).to("m") == chromatic_sym(g)


def test_w_examples():
    for n in range(1, 5):
        assert W_redei(discrete_digraph(n)) == nc_basis_element("h", SetPartition.full(n)).to("m")
    assert W_redei(EDGE) == nc_basis_element("p", "1/2").to("m")


@pytest.mark.parametrize("n", range(1, 4))
def test_w_well_defined_and_commutes(n):
    for X in digraphs(n, loops=True):
        W, consistent = W_by_words(X)
        assert consistent
        assert W == W_redei(X)
        assert rho(W_redei(X)).to("m") == redei_berge_sym(X)


@settings(max_examples=20, deadline=None)
@given(st.integers(4, 4), st.integers(0, 10 ** 6))
def test_w_well_defined_random_n4(n, seed):
    X = random_digraph(random.Random(seed), n, loops=True)
    W, consistent = W_by_words(X)
    assert consistent and W == W_redei(X)


@pytest.mark.parametrize("n", range(1, 5))
def test_y_inc_is_omega_w(n):
    for p in enumerate_posets(n):
        assert Y_chromatic(inc(p)) == omega_ncsym(poset_W(p))


@pytest.mark.parametrize("n", range(1, 5))
def test_w_relabeling_equivariance(n):
    rng = random.Random(n)
    for X in itertools.islice(digraphs(n), 0, None, 17):
        delta = list(range(1, n + 1))
        rng.shuffle(delta)
        assert sn_action(delta, W_redei(X)) == W_redei(relabel(X, delta))


def test_deletion_contraction_examples():
    assert deletion_contraction_W(EDGE, (1, 2)).holds
    with pytest.raises(ValueError):
        deletion_contraction_W(EDGE, (2, 1))
    assert deletion_contraction_Y(PATH3, (1, 2)).holds


@pytest.mark.parametrize("n", range(2, 4))
def test_deletion_contraction_exhaustive(n):
    for X in digraphs(n):
        for e in X.arcs:
            check = deletion_contraction_W(X, e)
            assert check.holds, check.witness
    for g in graphs(n + 1):
        for e in g.edges:
            assert deletion_contraction_Y(g, e).holds


def test_w_of_product_is_product():
    rng = random.Random(3)
    for _ in range(30):
        a = rng.randint(1, 3)
        b = rng.randint(1, 5 - a)
        X, Y = random_digraph(rng, a), random_digraph(rng, b)
        assert W_redei(product(X, Y)) == ncsym_multiply(W_redei(X), W_redei(Y))


# --- h-positivity construction

def test_h_step_examples():
    steps = iterate_h_steps(discrete_digraph(1), 2)
    Y = steps[-1].digraph
    assert Y == D(3, (1, 3))
    assert inc(Poset(3, Y.arcs)) == PATH3
    assert all(steps)
    lollipop = h_positivity_step(discrete_digraph(3))
    assert lollipop
    p4 = Graph(4, frozenset({(1, 2), (2, 3), (3, 4)}))
    assert positivity(chromatic_sym(p4), "e").positive
    with pytest.raises(ValueError):
        h_positivity_step(D(2, (2, 1)))


def test_h_step_literal_positivity_can_fail():
    # h-positivity holds after summing over congruence classes, not coefficientwise
    step = h_positivity_step(D(3, (1, 3)))
    assert step.classes_positive
    assert not step.literal.positive
    W = W_redei(step.digraph)
    assert step.literal.certificate == SP("124/3")
    assert W.to("h")[SP("124/3")] == step.literal.coeff == Fraction(-1, 6)
    assert W.to("h").to("m") == W


@pytest.mark.parametrize("n", range(2, 7))
def test_paths_and_lollipops_are_e_positive(n):
    X = path_seed(n)
    g = Graph(n, frozenset(itertools.combinations(range(1, n + 1), 2)) - {tuple(sorted(a)) for a in X.arcs})
    assert g == Graph(n, frozenset((i, i + 1) for i in range(1, n)))
    assert positivity(omega_sym(redei_berge_sym(X)), "e").positive
    for clique in range(1, n):
        L = lollipop_seed(clique, n - clique)
        assert positivity(omega_sym(redei_berge_sym(L)), "e").positive
