import itertools
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from rbchrom.core import partitions
from rbchrom.symfn import (
    NotSymmetricError,
    QSymElement,
    SymElement,
    UniPolynomial,
    basis_element,
    embed_sym_in_qsym,
    multiply,
    omega_qsym,
    omega_sym,
    positivity,
    principal_specialization,
    project_qsym_to_sym,
    transition_matrix,
)
from rbchrom.structures import Graph
from rbchrom.invariants import chromatic_sym

SYM = ("m", "e", "p", "h", "s")


def F(n, *subsets):
    return QSymElement(n, "F", {frozenset(s): 1 for s in subsets})


def test_fundamental_to_monomial():
    assert F(2, ()).to("M") == QSymElement(2, "M", {frozenset(): 1, frozenset({1}): 1})
    assert F(2, (1,)).to("M") == QSymElement(2, "M", {frozenset({1}): 1})
    assert QSymElement(2, "M", {frozenset(): 1}).to("F").coeffs == {frozenset(): 1, frozenset({1}): -1}


def test_omega_on_fundamentals():
    assert omega_qsym(F(3, (1,))) == F(3, (2,))
    assert omega_qsym(F(4, ())) == F(4, (1, 2, 3))


def _random_qsym(draw_coeffs, n):
    keys = [frozenset(c) for r in range(n) for c in itertools.combinations(range(1, n), r)]
    return QSymElement(n, "F", dict(zip(keys, draw_coeffs)))


@given(st.integers(1, 5).flatmap(lambda n: st.tuples(st.just(n), st.lists(st.integers(-3, 3), min_size=2 ** (n - 1), max_size=2 ** (n - 1)))))
def test_qsym_omega_involution_and_round_trip(data):
    n, coeffs = data
    f = _random_qsym(coeffs, n)
    assert omega_qsym(omega_qsym(f)) == f
    assert f.to("M").to("F") == f


def test_sym_to_m_examples():
    assert basis_element("p", (2,)).to("m") == SymElement(2, "m", {(2,): 1})
    assert basis_element("e", (2,)).to("m") == SymElement(2, "m", {(1, 1): 1})
    assert basis_element("p", (1, 1)).to("m") == SymElement(2, "m", {(2,): 1, (1, 1): 2})
    assert SymElement(2, "m", {(2,): 1, (1, 1): 2}).to("p") == basis_element("p", (1, 1))


def test_e_n_is_schur_column():
    for n in range(1, 6):
        assert basis_element("e", (n,)).to("s").coeffs == {(1,) * n: 1}


def test_schur_against_kostka_numbers():
    # s_(2,1) = m_(2,1) + 2 m_(1,1,1)
    assert basis_element("s", (2, 1)).to("m").coeffs == {(2, 1): 1, (1, 1, 1): 2}


def test_omega_sym_examples():
    assert omega_sym(basis_element("h", (2, 1))) == basis_element("e", (2, 1))
    assert omega_sym(basis_element("p", (2,))) == basis_element("p", (2,)).scale(-1)
    assert omega_sym(basis_element("p", (3,))) == basis_element("p", (3,))
    assert omega_sym(basis_element("s", (2, 1))) == basis_element("s", (2, 1))
    assert omega_sym(basis_element("s", (3, 1))) == basis_element("s", (2, 1, 1))


@pytest.mark.parametrize("n", range(1, 7))
def test_all_basis_round_trips(n):
    for lam in partitions(n):
        for a in SYM:
            f = basis_element(a, lam)
            for b in SYM:
                assert f.to(b).to(a) == f
                assert omega_sym(f.to(b)) == omega_sym(f)
            assert omega_sym(omega_sym(f)) == f
            assert project_qsym_to_sym(embed_sym_in_qsym(f.to("m"))) == f


@pytest.mark.parametrize("n", range(1, 7))
def test_transition_matrices_invert(n):
    for a, b in itertools.product(SYM, repeat=2):
        keys, ab = transition_matrix(a, b, n)
        _, ba = transition_matrix(b, a, n)
        size = len(keys)
        prod = [[sum(ab[i][k] * ba[k][j] for k in range(size)) for j in range(size)] for i in range(size)]
        assert prod == [[int(i == j) for j in range(size)] for i in range(size)]


def test_products():
    p1 = basis_element("p", (1,))
    assert multiply(p1, p1) == basis_element("p", (1, 1))
    assert multiply(basis_element("e", (1,)), basis_element("e", (2,))) == basis_element("e", (2, 1))
    assert multiply(F(1, ()), F(1, ())) == F(2, (), (1,))


sym_elements = st.integers(1, 3).flatmap(
    lambda n: st.builds(
        lambda basis, cs: SymElement(n, basis, dict(zip(partitions(n), cs))),
        st.sampled_from(SYM),
        st.lists(st.integers(-3, 3), min_size=len(partitions(n)), max_size=len(partitions(n))),
    )
)


@settings(max_examples=40, deadline=None)
@given(sym_elements, sym_elements)
def test_omega_and_ps1_are_multiplicative(f, g):
    fg = multiply(f, g)
    assert omega_sym(fg) == multiply(omega_sym(f), omega_sym(g))
    assert principal_specialization(fg) == principal_specialization(f) * principal_specialization(g)
    assert multiply(f, g) == multiply(g, f)


def _ps1_brute(f: QSymElement, m: int) -> int:
    # count weakly increasing words in [m] with strict increases at the positions of I
    n = f.degree
    fx = f.to("F")
    total = Fraction(0)
    for key, c in fx.coeffs.items():
        count = 0
        for w in itertools.product(range(1, m + 1), repeat=n):
            if all(w[i] <= w[i + 1] for i in range(n - 1)) and all(w[i - 1] < w[i] for i in key):
                count += 1
        total += c * count
    return total


def test_principal_specialization_examples():
    assert principal_specialization(QSymElement(3, "M", {(2, 1): 1})) == UniPolynomial([0, Fraction(-1, 2), Fraction(1, 2)])
    assert principal_specialization(F(2, ()))(2) == 3
    for n in range(1, 5):
        full = F(n, tuple(range(1, n)))
        assert principal_specialization(full) == UniPolynomial.binomial(0, n)


@pytest.mark.parametrize("n", range(1, 5))
def test_fundamental_ps1_against_enumeration(n):
    for r in range(n):
        for I in itertools.combinations(range(1, n), r):
            f = F(n, I)
            poly = principal_specialization(f)
            for m in range(0, 5):
                assert poly(m) == _ps1_brute(f, m) == comb(m + n - 1 - r, n)


def test_positivity_certificates():
    assert positivity(basis_element("p", (1, 1)), "e").positive
    neg = positivity(SymElement(1, "m", {(1,): -1}), "m")
    assert not neg.positive and neg.certificate == (1,)
    c4 = Graph(4, frozenset({(1, 2), (2, 3), (3, 4), (1, 4)}))
    assert positivity(chromatic_sym(c4), "e").positive


def test_embedding_and_projection():
    assert embed_sym_in_qsym(SymElement(3, "m", {(2, 1): 1})) == QSymElement(3, "M", {(2, 1): 1, (1, 2): 1})
    assert project_qsym_to_sym(QSymElement(3, "M", {(2, 1): 1, (1, 2): 1})) == SymElement(3, "m", {(2, 1): 1})
    with pytest.raises(NotSymmetricError) as err:
        project_qsym_to_sym(QSymElement(3, "M", {(2, 1): 1}))
    assert set(err.value.pair) == {(2, 1), (1, 2)}


def test_json_round_trip():
    f = SymElement(3, "p", {(2, 1): Fraction(-3, 2), (1, 1, 1): 1})
    assert SymElement.from_json(f.to_json()) == f
    assert f.to_json()["terms"][0] == {"key": "1,1,1", "coeff": "1"}
    g = F(3, (), (2,))
    assert QSymElement.from_json(g.to_json()) == g
    poly = UniPolynomial([0, Fraction(1, 2), 3])
    assert UniPolynomial.from_json(poly.to_json()) == poly


def test_polynomial_printing():
    assert str(UniPolynomial([0, 0, 1])) == "m^2"
    assert str(UniPolynomial([0, Fraction(-1, 2), Fraction(1, 2)])) == "1/2*m^2 - 1/2*m"
    assert str(UniPolynomial()) == "0"
