import itertools
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from rbchrom.core import SetPartition, meet, pi_plus, pi_slash, set_partitions
from rbchrom.ncsym import (
    NCSymElement,
    check_induction_theorem,
    congruence_collapse,
    induct,
    induct_h_formula,
    nc_basis_element,
    ncsym_multiply,
    omega_ncsym,
    rho,
    sn_action,
    unit,
)
from rbchrom.symfn import SymElement, omega_sym
from rbchrom.structures import Graph, relabel
from rbchrom.invariants import Y_chromatic

SP = SetPartition.decode
NC = ("m", "e", "p", "h")


def _kernel(word):
    return SetPartition.from_labels(word)


def _words(n, k):
    return itertools.product(range(1, k + 1), repeat=n)


def _word_expansion(f: NCSymElement, k: int) -> dict:
    """Expand in monomials over k variables, straight from the basis definitions."""
    out: dict = {}
    n = f.degree
    for pi, c in f.coeffs.items():
        blocks = pi.blocks
        for w in _words(n, k):
            if f.basis == "m":
                mult = int(_kernel(w) == pi)
            elif f.basis == "p":
                mult = int(all(len({w[i - 1] for i in b}) == 1 for b in blocks))
            elif f.basis == "e":
                mult = int(all(len({w[i - 1] for i in b}) == len(b) for b in blocks))
            else:  # h: sum over sigma of (sigma meet pi)! m_sigma
                mult = factorial_weight(meet(_kernel(w), pi))
            if mult:
                out[w] = out.get(w, Fraction(0)) + c * mult
    return {w: v for w, v in out.items() if v}


def factorial_weight(pi):
    r = 1
    for b in pi.blocks:
        r *= factorial(len(b))
    return r


def test_to_m_examples():
    assert nc_basis_element("p", "1/2").to("m") == NCSymElement(2, "m", {SP("1/2"): 1, SP("12"): 1})
    assert nc_basis_element("h", "12").to("m") == NCSymElement(2, "m", {SP("12"): 2, SP("1/2"): 1})
    assert nc_basis_element("e", "12").to("m") == NCSymElement(2, "m", {SP("1/2"): 1})


def test_from_m_examples():
    # inverting p_pi = sum over sigma >= pi of m_sigma at n=2
    assert nc_basis_element("m", "12").to("p") == NCSymElement(2, "p", {SP("12"): 1})
    assert nc_basis_element("m", "1/2").to("p") == NCSymElement(2, "p", {SP("1/2"): 1, SP("12"): -1})
    assert nc_basis_element("h", "12").to("p") == NCSymElement(2, "p", {SP("12"): 1, SP("1/2"): 1})


@pytest.mark.parametrize("n", range(1, 5))
def test_basis_definitions_match_word_expansions(n):
    for pi in set_partitions(n):
        for b in NC:
            f = nc_basis_element(b, pi)
            assert _word_expansion(f, n) == _word_expansion(f.to("m"), n)


@pytest.mark.parametrize("n", range(0, 5))
def test_round_trips(n):
    for pi in set_partitions(n):
        for a in NC:
            f = nc_basis_element(a, pi)
            for b in NC:
                assert f.to(b).to(a) == f


def test_omega_examples():
    assert omega_ncsym(nc_basis_element("h", "12")) == nc_basis_element("e", "12").to("h")
    assert omega_ncsym(nc_basis_element("p", "1/2/3")) == nc_basis_element("p", "1/2/3")


@pytest.mark.parametrize("n", range(1, 5))
def test_omega_swaps_e_and_h(n):
    for pi in set_partitions(n):
        e, h = nc_basis_element("e", pi), nc_basis_element("h", pi)
        assert omega_ncsym(e) == h.to("e")
        assert omega_ncsym(omega_ncsym(h)) == h


@pytest.mark.parametrize("n", range(1, 5))
def test_omega_anticommutes_with_induction(n):
    for pi in set_partitions(n):
        for b in NC:
            f = nc_basis_element(b, pi)
            assert omega_ncsym(induct(f)) == induct(omega_ncsym(f)).scale(-1)


@pytest.mark.parametrize("n", range(1, 5))
def test_rho_commutes_with_omega(n):
    for pi in set_partitions(n):
        for b in NC:
            f = nc_basis_element(b, pi)
            assert rho(omega_ncsym(f)) == omega_sym(rho(f))
            assert rho(f.to("m")) == rho(f)


def test_induction_examples():
    assert induct(nc_basis_element("m", "1/2")) == nc_basis_element("m", "1/23")
    assert induct(nc_basis_element("p", "12")) == nc_basis_element("p", "123")
    with pytest.raises(ValueError):
        induct(unit())


@pytest.mark.parametrize("n", range(1, 5))
def test_induction_h_formula(n):
    for pi in set_partitions(n):
        assert induct(nc_basis_element("h", pi)) == induct_h_formula(pi)


def test_rho_examples():
    assert rho(nc_basis_element("m", "12/3")) == SymElement(3, "m", {(2, 1): 1})
    assert rho(nc_basis_element("m", "1/2/3")) == SymElement(3, "m", {(1, 1, 1): 6})
    assert rho(nc_basis_element("p", "1/23")) == SymElement(3, "p", {(2, 1): 1})
    for n in range(1, 5):
        full = SetPartition.full(n)
        assert rho(nc_basis_element("h", full)) == SymElement(n, "h", {(n,): factorial(n)})


def test_sn_action_examples():
    assert sn_action((2, 1, 3), nc_basis_element("m", "1/23")) == nc_basis_element("m", "13/2")
    f = nc_basis_element("h", "12/3")
    assert sn_action((1, 2, 3), f) == f
    with pytest.raises(ValueError):
        sn_action((1, 1, 3), f)
    path = Graph(3, frozenset({(1, 2), (2, 3)}))
    for delta in itertools.permutations((1, 2, 3)):
        assert sn_action(delta, Y_chromatic(path)) == Y_chromatic(relabel(path, delta))


@given(
    st.sampled_from(NC),
    st.sampled_from(set_partitions(4)),
    st.permutations((1, 2, 3, 4)),
    st.permutations((1, 2, 3, 4)),
)
def test_sn_action_is_group_action_and_basis_free(basis, pi, d1, d2):
    f = nc_basis_element(basis, pi)
    composed = tuple(d1[d2[j] - 1] for j in range(4))
    assert sn_action(composed, f) == sn_action(d1, sn_action(d2, f))
    assert sn_action(d1, f).to("m") == sn_action(d1, f.to("m"))


def test_products():
    m1 = nc_basis_element("m", "1")
    assert ncsym_multiply(m1, m1) == NCSymElement(2, "m", {SP("12"): 1, SP("1/2"): 1})
    h = nc_basis_element("h", "12")
    assert ncsym_multiply(h, h) == nc_basis_element("h", "12/34")
    f = nc_basis_element("e", "13/2")
    assert ncsym_multiply(f, unit()) == f and ncsym_multiply(unit(), f) == f


def _concat(u: dict, v: dict) -> dict:
    out: dict = {}
    for w1, c in u.items():
        for w2, d in v.items():
            out[w1 + w2] = out.get(w1 + w2, 0) + c * d
    return {w: c for w, c in out.items() if c}


@pytest.mark.parametrize("a,b", [(1, 1), (1, 2), (2, 1), (2, 2), (1, 3), (3, 1)])
def test_product_matches_word_convolution(a, b):
    k = a + b
    for pi in set_partitions(a):
        for sigma in set_partitions(b):
            for basis in ("m", "h"):
                f, g = nc_basis_element(basis, pi), nc_basis_element(basis, sigma)
                expected = _concat(_word_expansion(f, k), _word_expansion(g, k))
                assert _word_expansion(ncsym_multiply(f, g), k) == expected


def test_congruence_collapse_examples():
    f = NCSymElement(3, "h", {SP("12/3"): 1, SP("13/2"): 1})
    assert congruence_collapse(f, 3) == {((2, 1), 1): 1, ((2, 1), 2): 1}
    assert congruence_collapse(NCSymElement(3, "h", {}), 3) == {}


@pytest.mark.parametrize("n", range(1, 5))
def test_collapse_of_induced_h(n):
    for pi in set_partitions(n):
        b = Fraction(1, len(pi.block_of(n)))
        got = congruence_collapse(induct(nc_basis_element("h", pi)), n + 1)
        plus, slash = pi_plus(pi), pi_slash(pi)
        expected = {}
        expected[(plus.shape(), len(plus.block_of(n + 1)))] = b
        expected[(slash.shape(), 1)] = -b
        assert got == expected


@pytest.mark.parametrize("n", range(1, 5))
def test_induction_theorem(n):
    for pi in set_partitions(n):
        ok, witness = check_induction_theorem(pi)
        assert ok, witness


def test_json_round_trip():
    f = NCSymElement(3, "e", {SP("12/3"): Fraction(2, 3), SP("1/2/3"): -1})
    data = f.to_json()
    assert data["terms"][0]["key"] in {"12/3", "1/2/3"}
    assert NCSymElement.from_json(data) == f


def test_keys_must_partition_degree():
    with pytest.raises(ValueError):
        NCSymElement(3, "m", {SP("12"): 1})
