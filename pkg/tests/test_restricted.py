import pytest

from areawalks.compositions import compositions
from areawalks.laurent import ZERO, AreaPolynomial
from areawalks.restricted import (
    count_diagonal,
    gf_diagonal,
    gf_paradiagonal_even,
    gf_paradiagonal_odd,
    sum_over_lines_check,
)


def test_diagonal_length_two():
    # length-2 walks ending on k+l=0: endpoints (0,0), (1,-1), (-1,1)
    assert gf_diagonal(1) == AreaPolynomial({-1: 2, 0: 4, 1: 2})


def test_diagonal_symmetric_support():
    for n in range(1, 8):
        assert gf_diagonal(n).is_palindromic()


def test_paradiagonal_even_examples():
    # the 4 length-2 walks ending on k+l=2 are RR, UU, RU, UR
    assert gf_paradiagonal_even(1, 1) == AreaPolynomial({-1: 1, 0: 2, 1: 1})
    assert gf_paradiagonal_even(1, 0) == gf_diagonal(1)
    assert gf_paradiagonal_even(1, 2) == ZERO


def test_paradiagonal_odd_examples():
    # length-1 walks on k+l=1: R and U, both area 0
    assert gf_paradiagonal_odd(1, 0) == AreaPolynomial({0: 2})
    assert gf_paradiagonal_odd(2, 2) == ZERO
    assert set(gf_paradiagonal_odd(2, 1).support()) <= {-2, 0, 2}


def test_raw_flag_doubles_off_mirror_lines():
    assert gf_paradiagonal_even(1, 1, raw=True) == AreaPolynomial({-1: 2, 0: 4, 1: 2})
    assert gf_paradiagonal_odd(1, 0, raw=True) == AreaPolynomial({0: 4})
    for n in range(1, 7):
        for line_index in range(1, n + 1):
            halved = gf_paradiagonal_even(n, line_index)
            assert gf_paradiagonal_even(n, line_index, raw=True) == 2 * halved
        for line_index in range(n):
            halved = gf_paradiagonal_odd(n, line_index)
            assert gf_paradiagonal_odd(n, line_index, raw=True) == 2 * halved
    # the self-mirrored line c = 0 is counted once already
    assert gf_paradiagonal_even(3, 0, raw=True) == gf_paradiagonal_even(3, 0)


def test_count_diagonal_examples():
    assert count_diagonal(1, 0) == 4
    assert count_diagonal(1, 1) == 2
    assert count_diagonal(1, 3) == 0


@pytest.mark.parametrize("n", range(1, 7))
def test_count_diagonal_matches_coefficients(n):
    poly = gf_diagonal(n)
    hi = max(poly.support())
    for a2 in range(-hi - 1, hi + 2):
        assert count_diagonal(n, a2) == poly.coefficient(a2)


@pytest.mark.parametrize("n_steps", range(1, 11))
def test_sum_over_lines(n_steps):
    assert sum_over_lines_check(n_steps)


def test_lines_match_oracle(dp_hists):
    for n_steps in range(1, 15):
        hist = dp_hists[n_steps]
        if n_steps % 2 == 0:
            n = n_steps // 2
            assert gf_diagonal(n) == hist.line_gf(0)
            for line_index in range(1, n + 1):
                assert gf_paradiagonal_even(n, line_index) == hist.line_gf(2 * line_index)
        else:
            n = (n_steps + 1) // 2
            for line_index in range(n):
                assert gf_paradiagonal_odd(n, line_index) == hist.line_gf(2 * line_index + 1)


def test_mirror_line_symmetry(dp_hists):
    # the oracle confirms that lines c and -c carry identical polynomials
    for n_steps in (2, 3, 4, 5, 6):
        hist = dp_hists[n_steps]
        for c in range(1, n_steps + 1):
            assert hist.line_gf(c) == hist.line_gf(-c)


@pytest.mark.parametrize("n", range(1, 11))
def test_prefactor_resummation_even(n):
    # sum over I of (l_I + l_{I+1}) with l_0 = l_{j+1} = 0 gives 2n
    for parts in compositions(n):
        j = len(parts)
        total = sum(
            (parts[i - 1] if 1 <= i <= j else 0) + (parts[i] if 0 <= i < j else 0)
            for i in range(j + 1)
        )
        assert total == 2 * n


@pytest.mark.parametrize("n", range(1, 11))
def test_prefactor_resummation_odd(n):
    # odd case: (2 l_0 - 1 + l_1) at I=0 plus (l_I + l_{I+1}) over the rest
    # sums to 2n - 1 for every composition
    for comp in compositions(n):
        l0, rest = comp[0], comp[1:]
        j = len(rest)
        total = 2 * l0 - 1 + (rest[0] if rest else 0)
        total += sum(
            (rest[i - 1] if 1 <= i <= j else 0) + (rest[i] if 0 <= i < j else 0)
            for i in range(1, j + 1)
        )
        assert total == 2 * n - 1


def test_unreachable_lines_are_empty():
    for n in range(1, 5):
        assert gf_paradiagonal_even(n, n + 1) == ZERO
        assert gf_paradiagonal_odd(n, n) == ZERO


def test_cluster_weight_integrality_in_context():
    # 2^{l1} l1 c and the prefactor-weighted sums stay integral, so the
    # halved polynomials have integer coefficients too
    for n in range(1, 9):
        for line_index in range(n + 1):
            poly = gf_paradiagonal_even(n, line_index)
            assert all(isinstance(c, int) for _, c in poly.items())
        for line_index in range(n):
            poly = gf_paradiagonal_odd(n, line_index)
            assert all(isinstance(c, int) for _, c in poly.items())


def test_rejects_bad_arguments():
    with pytest.raises(ValueError):
        gf_diagonal(0)
    with pytest.raises(ValueError):
        count_diagonal(0, 0)
    with pytest.raises(ValueError):
        gf_paradiagonal_even(1, -1)
    with pytest.raises(ValueError):
        gf_paradiagonal_odd(1, -1)
    with pytest.raises(ValueError):
        sum_over_lines_check(0)
