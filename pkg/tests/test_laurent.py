import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from areawalks.laurent import (
    ONE,
    ZERO,
    AreaPolynomial,
    monomial,
    root_of_unity,
)

polys = st.dictionaries(
    st.integers(min_value=-12, max_value=12),
    st.integers(min_value=-(10**6), max_value=10**6),
    max_size=8,
).map(AreaPolynomial)


def test_zero_coefficients_are_dropped():
    p = AreaPolynomial({0: 4, 3: 0, -2: 1})
    assert p.support() == [-2, 0]
    assert p.coefficient(3) == 0
    assert len(p) == 2


def test_rejects_non_integer_coefficients():
    with pytest.raises(TypeError):
        AreaPolynomial({0: 1.5})
    with pytest.raises(TypeError):
        AreaPolynomial({0.5: 1})


def test_empty_polynomial_is_falsy():
    assert not ZERO
    assert ZERO.is_zero()
    assert AreaPolynomial() == ZERO
    assert AreaPolynomial({1: 2})


def test_addition_and_subtraction():
    a = AreaPolynomial({-1: 2, 0: 4})
    b = AreaPolynomial({0: -4, 1: 3})
    assert a + b == AreaPolynomial({-1: 2, 1: 3})
    assert (a + b) - b == a


def test_multiplication_matches_convolution():
    a = AreaPolynomial({-1: 1, 1: 1})
    assert a * a == AreaPolynomial({-2: 1, 0: 2, 2: 1})
    assert a * ZERO == ZERO
    assert a * ONE == a


def test_int_scaling_both_sides():
    a = AreaPolynomial({0: 2, 1: 1})
    assert 3 * a == a * 3 == AreaPolynomial({0: 6, 1: 3})
    assert 0 * a == ZERO


def test_power():
    a = AreaPolynomial({-1: 1, 1: 1})
    assert a**0 == ONE
    assert a**3 == a * a * a
    with pytest.raises(ValueError):
        a**-1


def test_shift_and_mirror():
    a = AreaPolynomial({-1: 1, 2: 5})
    assert a.shifted(3) == AreaPolynomial({2: 1, 5: 5})
    assert a.mirrored() == AreaPolynomial({1: 1, -2: 5})
    assert a.mirrored().mirrored() == a


def test_exact_half():
    assert AreaPolynomial({0: 4, 1: 2}).exact_half() == AreaPolynomial({0: 2, 1: 1})
    with pytest.raises(ValueError):
        AreaPolynomial({0: 3}).exact_half()


def test_palindromic():
    assert AreaPolynomial({-2: 1, 0: 5, 2: 1}).is_palindromic()
    assert not AreaPolynomial({-2: 1, 2: 2}).is_palindromic()
    assert ZERO.is_palindromic()


def test_evaluations():
    g2 = AreaPolynomial({-1: 4, 0: 8, 1: 4})
    assert g2.eval_at_one() == 16
    root = root_of_unity(1, 2)
    expected = 8 + 4 * root + 4 / root
    assert abs(g2.eval_at_root(1, 2) - expected) < 1e-12
    assert abs(g2.eval_at(root) - expected) < 1e-12


def test_root_of_unity_value():
    # p=1, s=2: exp(2 pi i * 3 / 5)
    assert abs(root_of_unity(1, 2) - complex(math.cos(6 * math.pi / 5), math.sin(6 * math.pi / 5))) < 1e-12
    with pytest.raises(ValueError):
        root_of_unity(5, 2)  # gcd(5, 5) != 1
    with pytest.raises(ValueError):
        root_of_unity(1, 0)


def test_monomial():
    assert monomial(3, 7) == AreaPolynomial({3: 7})
    assert monomial(3, 0) == ZERO


def test_json_round_trip():
    p = AreaPolynomial({-3: 2**80, 0: 1})
    payload = p.to_json_dict()
    assert payload["coeffs"]["-3"] == str(2**80)
    assert AreaPolynomial.from_json_dict(payload) == p


@given(polys, polys, polys)
def test_ring_identities(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert a + b == b + a
    assert (a - b) + b == a


@given(polys, polys)
def test_evaluation_is_ring_homomorphism(a, b):
    q = root_of_unity(1, 3)
    lhs = (a * b).eval_at(q)
    rhs = a.eval_at(q) * b.eval_at(q)
    scale = max(1.0, abs(lhs), abs(rhs))
    assert abs(lhs - rhs) / scale < 1e-9


@given(polys)
def test_mirror_matches_eval_inverse(a):
    q = root_of_unity(2, 2)
    assert abs(a.mirrored().eval_at(q) - a.eval_at(1 / q)) < 1e-6 * max(1.0, abs(a.eval_at(q)))
