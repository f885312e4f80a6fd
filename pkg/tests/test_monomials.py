"""Order engine: ranking, unranking, comparison, divisor counts."""

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rmopt.monomials import (
    as_monomial,
    binom,
    compare,
    degree_start,
    divisor_count,
    divisor_count_enumerated,
    grlex_key,
    index_to_monomial,
    iter_monomials,
    monomial_to_index,
)


def _reference_order(m, max_degree):
    # sort-based enumeration, independent of the combinatorial ranking
    out = [
        a
        for a in itertools.product(range(max_degree + 1), repeat=m)
        if sum(a) <= max_degree
    ]
    out.sort(key=lambda a: (sum(a), a))
    return out


def test_binom_zero_convention():
    assert binom(2, 3) == 0
    assert binom(-1, 0) == 0
    assert binom(-3, 2) == 0
    assert binom(5, 2) == 10
    assert binom(0, 0) == 1


def test_compare_single_variables():
    # x_2 comes before x_1
    assert compare((0, 1), (1, 0)) == -1
    assert compare((1, 0), (0, 1)) == 1


def test_compare_is_reflexive():
    assert compare((2, 0, 1), (2, 0, 1)) == 0


def test_compare_degree_dominates():
    # x_1 has lower degree than x_3^2, so it comes first
    assert compare((1, 0, 0), (0, 0, 2)) == -1


def test_compare_rejects_dimension_mismatch():
    with pytest.raises(ValueError):
        compare((1, 0), (1, 0, 0))


def test_first_indices_m3():
    want = [
        (0, 0, 0),
        (0, 0, 1),
        (0, 1, 0),
        (1, 0, 0),
        (0, 0, 2),
        (0, 1, 1),
        (0, 2, 0),
        (1, 0, 1),
    ]
    assert [index_to_monomial(i, 3) for i in range(8)] == want


def test_unrank_examples():
    assert index_to_monomial(0, 3) == (0, 0, 0)
    assert index_to_monomial(1, 3) == (0, 0, 1)
    assert index_to_monomial(4, 3) == (0, 0, 2)


def test_rank_examples():
    assert monomial_to_index((0, 0, 0)) == 0
    assert monomial_to_index((1, 0, 0)) == 3
    assert monomial_to_index((1, 1)) == 4


def test_degree_start_examples():
    assert degree_start(0, 3) == 0
    assert degree_start(2, 3) == 4
    assert degree_start(1, 2) == 1


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_degree_start_matches_enumeration(m):
    ref = _reference_order(m, 7)
    for d in range(1, 8):
        first = min(i for i, a in enumerate(ref) if sum(a) == d)
        assert degree_start(d, m) == first


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_ranking_matches_reference_order(m):
    ref = _reference_order(m, 9)
    bound = min(len(ref), 250)
    for i in range(bound):
        assert index_to_monomial(i, m) == ref[i]
        assert monomial_to_index(ref[i]) == i


@pytest.mark.parametrize("m", [1, 2, 3, 5])
def test_iterator_agrees_with_unranking(m):
    for i, a in enumerate(iter_monomials(m)):
        if i == 400:
            break
        assert a == index_to_monomial(i, m)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_order_agreement_all_pairs(m):
    monos = [index_to_monomial(i, m) for i in range(60)]
    for i, j in itertools.combinations(range(60), 2):
        assert compare(monos[i], monos[j]) == -1
        assert compare(monos[j], monos[i]) == 1


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_successor_of_first_variable_powers(m):
    # after x_1^s the next monomial is x_m^(s+1)
    for s in range(8):
        j = monomial_to_index((s,) + (0,) * (m - 1))
        assert index_to_monomial(j + 1, m) == (0,) * (m - 1) + (s + 1,)


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_degree_bracketing(m):
    for i in range(300):
        a = index_to_monomial(i, m)
        d = sum(a)
        assert degree_start(d, m) <= i < degree_start(d + 1, m)


def test_divisor_count_examples():
    assert divisor_count((0, 0, 0)) == 1
    assert divisor_count((2, 1, 0)) == 6
    assert divisor_count((7,)) == 8


def test_divisor_count_enumerated_examples():
    assert divisor_count_enumerated((0, 0)) == 1
    assert divisor_count_enumerated((1, 2)) == 6
    assert divisor_count_enumerated((1, 1, 1)) == 8


@pytest.mark.parametrize("m", [2, 3])
def test_divisor_count_matches_enumeration(m):
    for i, a in enumerate(iter_monomials(m)):
        if i == 500:
            break
        assert divisor_count(a) == divisor_count_enumerated(a)


def test_monomial_validation():
    with pytest.raises(ValueError):
        as_monomial(())
    with pytest.raises(ValueError):
        as_monomial((1, -2))
    with pytest.raises(ValueError):
        monomial_to_index((0.5, 1))
    with pytest.raises(ValueError):
        index_to_monomial(-1, 2)
    with pytest.raises(ValueError):
        index_to_monomial(0, 0)


@given(st.integers(0, 200_000), st.integers(1, 6))
def test_roundtrip_property(i, m):
    a = index_to_monomial(i, m)
    assert monomial_to_index(a) == i


@given(st.lists(st.integers(0, 9), min_size=1, max_size=4))
def test_divisor_count_property(exps):
    a = tuple(exps)
    assert divisor_count(a) == divisor_count_enumerated(a)


@given(
    st.lists(st.integers(0, 6), min_size=3, max_size=3),
    st.lists(st.integers(0, 6), min_size=3, max_size=3),
)
def test_compare_agrees_with_rank(u, v):
    u, v = tuple(u), tuple(v)
    ranks = monomial_to_index(u) - monomial_to_index(v)
    want = 0 if ranks == 0 else (-1 if ranks < 0 else 1)
    assert compare(u, v) == want
    assert (grlex_key(u) < grlex_key(v)) == (want == -1)
