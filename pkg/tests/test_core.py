import itertools
from math import factorial

import pytest
from hypothesis import given, strategies as st

from rbchrom.core import (
    PositionSubset,
    SetPartition,
    comp_op,
    comp_to_set,
    compositions,
    decode_composition,
    decode_partition,
    encode_composition,
    encode_partition,
    enumerate_kind,
    is_finer,
    join,
    leq,
    listings,
    meet,
    mobius,
    partitions,
    pi_plus,
    pi_slash,
    pi_statistics,
    set_partitions,
    set_to_comp,
)

SP = SetPartition.decode


def test_composition_to_subset():
    assert comp_to_set((2, 1, 3)) == PositionSubset(frozenset({2, 3}), 6)
    assert comp_to_set((4,)).elements == frozenset()
    assert set_to_comp(PositionSubset(frozenset({1, 2, 3}), 4)) == (1, 1, 1, 1)


def test_subset_outside_ambient_rejected():
    with pytest.raises(ValueError):
        PositionSubset(frozenset({4}), 4)


@pytest.mark.parametrize("n", range(1, 8))
def test_composition_subset_bijection(n):
    comps = compositions(n)
    assert len(comps) == 2 ** (n - 1)
    images = {comp_to_set(a) for a in comps}
    assert len(images) == len(comps)
    assert all(set_to_comp(comp_to_set(a)) == a for a in comps)


def test_is_finer():
    assert is_finer((1, 1, 1), (2, 1))
    assert not is_finer((2, 1), (1, 2))
    assert is_finer((2, 1), (2, 1))
    with pytest.raises(ValueError):
        is_finer((1, 1), (3,))


@given(st.lists(st.integers(1, 4), min_size=1, max_size=6))
def test_subset_involutions(parts):
    I = comp_to_set(parts)
    assert I.complement().complement() == I
    assert I.opposite().opposite() == I
    assert comp_op(parts) == tuple(reversed(parts))
    assert PositionSubset.decode(I.encode()) == I


def test_meet_and_join():
    assert meet(SP("13/2"), SP("12/3")) == SP("1/2/3")
    assert join(SP("13/2"), SP("12/3")) == SP("123")
    assert join(SP("12/34"), SP("14/23")) == SP("1234")
    pi = SP("12/3/45")
    assert meet(pi, pi) == pi and join(pi, pi) == pi


def test_mismatched_ambient_rejected():
    with pytest.raises(ValueError):
        meet(SP("12"), SP("1/2/3"))


def _mobius_recursive(sigma, pi, n):
    # mu(pi, pi) = 1, and sum over sigma <= tau <= pi of mu(tau, pi) = 0 for sigma < pi
    if sigma == pi:
        return 1
    return -sum(_mobius_recursive(tau, pi, n) for tau in set_partitions(n)
                if leq(sigma, tau) and leq(tau, pi) and tau != sigma)


def test_mobius_examples():
    assert mobius(SP("1/2/3"), SP("123")) == 2 == _mobius_recursive(SP("1/2/3"), SP("123"), 3)
    assert mobius(SP("1/2"), SP("12")) == -1 == _mobius_recursive(SP("1/2"), SP("12"), 2)
    assert mobius(SP("13/2"), SP("13/2")) == 1
    with pytest.raises(ValueError):
        mobius(SP("12/3"), SP("13/2"))


@pytest.mark.parametrize("n", range(1, 5))
def test_mobius_product_formula_matches_recursion(n):
    parts = set_partitions(n)
    for sigma, pi in itertools.product(parts, repeat=2):
        if leq(sigma, pi):
            assert mobius(sigma, pi) == _mobius_recursive(sigma, pi, n)


@pytest.mark.parametrize("n", range(1, 6))
def test_mobius_defining_relation(n):
    parts = set_partitions(n)
    for sigma, pi in itertools.product(parts, repeat=2):
        if leq(sigma, pi):
            total = sum(mobius(tau, pi) for tau in parts if leq(sigma, tau) and leq(tau, pi))
            assert total == (1 if sigma == pi else 0)


@pytest.mark.parametrize("n", range(1, 5))
def test_lattice_axioms(n):
    parts = set_partitions(n)
    for a, b in itertools.product(parts, repeat=2):
        assert meet(a, b) == meet(b, a) and join(a, b) == join(b, a)
        assert meet(a, join(a, b)) == a and join(a, meet(a, b)) == a
        assert leq(meet(a, b), a) and leq(a, join(a, b))
        if leq(a, b) and leq(b, a):
            assert a == b
    for a, b, c in itertools.islice(itertools.product(parts, repeat=3), 2000):
        assert meet(meet(a, b), c) == meet(a, meet(b, c))
        assert join(join(a, b), c) == join(a, join(b, c))
        if leq(a, b) and leq(b, c):
            assert leq(a, c)


def test_pi_statistics():
    assert pi_statistics(SP("12/3/4")) == ((2, 1, 1), 2, 2)
    assert pi_statistics(SetPartition.discrete(4)) == ((1, 1, 1, 1), 24, 1)
    assert pi_statistics(SetPartition.full(4)) == ((4,), 1, 24)


def test_pi_plus_and_slash():
    assert pi_plus(SP("12/3")) == SP("12/34")
    assert pi_slash(SP("12/3")) == SP("12/3/4")
    assert pi_plus(SetPartition.full(3)) == SetPartition.full(4)
    assert pi_plus(SetPartition.discrete(3)) == SP("1/2/34")


def test_enumeration_counts():
    assert len(set_partitions(3)) == 5
    assert len(partitions(5)) == 7
    assert len(list(listings("abc"))) == 6
    bell = [1, 1, 2, 5, 15, 52, 203]
    assert [len(set_partitions(n)) for n in range(7)] == bell
    assert sum(1 for _ in enumerate_kind("subsets", 4)) == 16


@pytest.mark.parametrize("kind", ["set-partitions", "partitions", "compositions", "listings", "subsets"])
def test_enumeration_is_duplicate_free_and_deterministic(kind):
    a = list(enumerate_kind(kind, 4))
    assert a == list(enumerate_kind(kind, 4))
    assert len(set(map(repr, a))) == len(a)


def test_set_partition_canonical_form():
    pi = SetPartition([[4, 3], [2], [1]])
    assert pi.encode() == "1/2/34"
    assert SP("34/1/2") == pi
    with pytest.raises(ValueError):
        SetPartition([[1, 2], [2, 3]])
    with pytest.raises(ValueError):
        SetPartition([[1], [3]])


def test_encodings_round_trip():
    assert encode_partition((2, 1, 1)) == "2,1,1"
    assert decode_partition("2,1,1") == (2, 1, 1)
    assert encode_composition((2, 1, 3)) == "(2|1|3)"
    assert decode_composition("(2|1|3)") == (2, 1, 3)
    assert PositionSubset(frozenset({2, 3}), 6).encode() == "{2,3}@n=6"


@given(st.integers(1, 6).flatmap(lambda n: st.sampled_from(set_partitions(n))))
def test_relabel_is_group_action(pi):
    n = pi.n
    perms = list(itertools.permutations(range(1, n + 1)))
    a, b = perms[len(perms) // 3], perms[-1]
    ab = tuple(a[b[i] - 1] for i in range(n))
    assert pi.relabel(b).relabel(a) == pi.relabel(ab)
    assert pi.relabel(tuple(range(1, n + 1))) == pi
    assert factorial(n) == len(perms)
