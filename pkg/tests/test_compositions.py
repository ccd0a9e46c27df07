from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from areawalks.compositions import (
    binomial,
    cluster_coeff,
    cluster_coeff_alt,
    cluster_coeff_bar,
    compositions,
)

composition_tuples = st.lists(
    st.integers(min_value=1, max_value=9), min_size=1, max_size=7
).map(tuple)


def test_binomial_matches_pascal():
    assert binomial(5, 2) == 10
    assert binomial(0, 0) == 1


def test_binomial_out_of_range_is_zero():
    assert binomial(3, -1) == 0
    assert binomial(3, 4) == 0
    assert binomial(-2, 0) == 0


def test_enumeration_order_n3():
    # descending-first order: coarse splits come before fine ones
    assert list(compositions(3)) == [(3,), (2, 1), (1, 2), (1, 1, 1)]


def test_enumeration_order_n4_prefix():
    comps = list(compositions(4))
    assert comps[0] == (4,)
    assert comps[1] == (3, 1)
    assert comps[-1] == (1, 1, 1, 1)
    assert len(comps) == 8


@pytest.mark.parametrize("n", range(1, 13))
def test_enumeration_complete(n):
    comps = list(compositions(n))
    assert len(comps) == 2 ** (n - 1)
    assert len(set(comps)) == len(comps)
    assert all(sum(c) == n and all(part >= 1 for part in c) for c in comps)


def test_compositions_rejects_nonpositive():
    with pytest.raises(ValueError):
        list(compositions(0))


def test_cluster_coeff_single_part():
    for l in range(1, 8):
        assert cluster_coeff((l,)) == Fraction(1, l)


def test_cluster_coeff_two_parts():
    # (1/l1) * binom(l1 + l2 - 1, l2)
    assert cluster_coeff((2, 1)) == Fraction(1, 2) * 2
    assert cluster_coeff((1, 2)) == Fraction(1, 1) * 1
    assert cluster_coeff((4, 2)) == Fraction(1, 4) * binomial(5, 2)


def test_cluster_coeff_bar_shifts_first_part():
    assert cluster_coeff_bar(1) == cluster_coeff((1,))
    assert cluster_coeff_bar(2, (1,)) == cluster_coeff((3, 1))
    assert cluster_coeff_bar(3, (2, 1)) == cluster_coeff((5, 2, 1))


def test_cluster_coeff_rejects_bad_parts():
    with pytest.raises(ValueError):
        cluster_coeff(())
    with pytest.raises(ValueError):
        cluster_coeff((2, 0))


@given(composition_tuples)
def test_both_product_forms_agree(parts):
    assert cluster_coeff(parts) == cluster_coeff_alt(parts)


@given(composition_tuples)
def test_weight_integrality(parts):
    n = sum(parts)
    assert (2 * n * cluster_coeff(parts)).denominator == 1
    l0, rest = parts[0], parts[1:]
    total = 2 * (l0 + sum(rest)) - 1
    assert (total * cluster_coeff_bar(l0, rest)).denominator == 1


@given(st.integers(min_value=1, max_value=11))
def test_total_cluster_weight(n):
    # sum over compositions of 2n * c equals binom(2n, n): the weights
    # tile the central binomial count of bridge configurations
    total = sum(2 * n * cluster_coeff(parts) for parts in compositions(n))
    assert total == binomial(2 * n, n)
