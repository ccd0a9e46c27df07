"""Generating functions and counting numbers for open walks of fixed length.

Two routes are implemented on purpose:

  - gf_open_even / gf_open_odd expand the composition sums into an exact
    AreaPolynomial (exponent t = 2A);
  - count_open_even / count_open_odd evaluate the explicit binomial
    multi-sums for a single area, term by term.

The two must agree coefficient by coefficient; the test suite and the
verify service hold them against each other and against the walk oracle.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from .compositions import binomial, cluster_coeff, cluster_coeff_bar, compositions
from .laurent import ONE, AreaPolynomial


@lru_cache(maxsize=None)
def _half_step_factor(i: int, l: int) -> AreaPolynomial:
    """(Q^{-i+1/2} + Q^{i-1/2})^{2l} expanded in t: the square kills half powers.

    Term k of the binomial expansion lands at t = (2i-1)(k-l).
    """
    return AreaPolynomial({(2 * i - 1) * (k - l): binomial(2 * l, k) for k in range(2 * l + 1)})


@lru_cache(maxsize=None)
def _int_step_factor(i: int, l: int) -> AreaPolynomial:
    """(Q^{-i} + Q^{i})^{2l} expanded in t; for i = 0 this is the constant 4^l."""
    if i == 0:
        return AreaPolynomial({0: 4**l})
    return AreaPolynomial({2 * i * (k - l): binomial(2 * l, k) for k in range(2 * l + 1)})


def _integral(x: Fraction) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"expected an integer weight, got {x}")
    return x.numerator


def gf_open_even(n: int) -> AreaPolynomial:
    """Area generating function of open walks with 2n steps.

    G_2n = 2n * sum over compositions (l_1..l_j) of n of
           2^{l_1} c(l_1..l_j) prod_i (Q^{-i+1/2} + Q^{i-1/2})^{2 l_i}.
    Every per-composition weight is asserted integral before scaling.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    total = AreaPolynomial()
    for parts in compositions(n):
        weight = _integral(2 * n * 2 ** parts[0] * cluster_coeff(parts))
        poly = ONE
        for i, l in enumerate(parts, start=1):
            poly = poly * _half_step_factor(i, l)
        total = total + poly * weight
    return total


def gf_open_odd(n: int) -> AreaPolynomial:
    """Area generating function of open walks with 2n-1 steps.

    G_{2n-1} = (2n-1) * sum over compositions (l_0..l_j) of n of
               c(2 l_0 - 1, l_1..l_j) prod_{i>=0} (Q^{-i} + Q^i)^{2 l_i}.
    Only even exponents t appear: odd-length walks have integer area.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    total = AreaPolynomial()
    for parts in compositions(n):
        l0, rest = parts[0], parts[1:]
        weight = _integral((2 * n - 1) * cluster_coeff_bar(l0, rest))
        poly = _int_step_factor(0, l0)
        for i, l in enumerate(rest, start=1):
            poly = poly * _int_step_factor(i, l)
        total = total + poly * weight
    return total


def gf_open(n_steps: int) -> AreaPolynomial:
    """Parity dispatch: walks of n_steps steps, any endpoint."""
    if n_steps < 1:
        raise ValueError(f"n_steps must be >= 1, got {n_steps}")
    if n_steps % 2 == 0:
        return gf_open_even(n_steps // 2)
    return gf_open_odd((n_steps + 1) // 2)


def count_open_even(n: int, t: int) -> int:
    """Number of 2n-step walks with doubled area t = 2A, by the literal multi-sum.

    C_2n(A) = 2n sum over compositions 2^{l_1} c(l_1..l_j)
              sum_{k_2..k_j} C(2l_1, l_1 + sum_r (2r-1) k_r - 2A)
                             prod_s C(2l_s, l_s + k_s)
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    total = 0
    for parts in compositions(n):
        l1 = parts[0]
        inner = _binomial_sum(l1, parts[1:], t, weight_odd_spacing=True)
        if inner:
            total += _integral(2 * n * 2**l1 * cluster_coeff(parts) * inner)
    return total


def count_open_odd(n: int, a: int) -> int:
    """Number of (2n-1)-step walks with integer area a, by the literal multi-sum.

    C_{2n-1}(A) = (2n-1) sum over compositions (l_0..l_j) 4^{l_0} c(2l_0-1, l_1..l_j)
                  sum_{k_2..k_j} C(2l_1, l_1 + sum_r r k_r - A)
                                 prod_s C(2l_s, l_s + k_s)
    A composition with no level part (j = 0) contributes only at A = 0.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    total = 0
    for parts in compositions(n):
        l0, rest = parts[0], parts[1:]
        l1 = rest[0] if rest else 0
        inner = _binomial_sum(l1, rest[1:], a, weight_odd_spacing=False)
        if inner:
            total += _integral((2 * n - 1) * 4**l0 * cluster_coeff_bar(l0, rest) * inner)
    return total


def _binomial_sum(l1: int, tail: tuple[int, ...], target: int, weight_odd_spacing: bool) -> int:
    """The inner sum over k_2..k_j shared by all the counting formulas.

    tail holds (l_2, ..., l_j); index r of the printed sums is the position
    of each part, so k_r is weighted by 2r-1 (even-length case) or r
    (odd-length case). Out-of-range binomials vanish.
    """
    total = 0
    ranges = [range(-l, l + 1) for l in tail]
    for kvec in itertools.product(*ranges):
        shift = 0
        prod = 1
        for idx, k in enumerate(kvec):
            r = idx + 2
            shift += ((2 * r - 1) if weight_odd_spacing else r) * k
            prod *= binomial(2 * tail[idx], tail[idx] + k)
            if prod == 0:
                break
        else:
            total += binomial(2 * l1, l1 + shift - target) * prod
    return total
