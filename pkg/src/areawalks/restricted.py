"""Generating functions for walks ending on a fixed lattice line k + l = c.

Walks of length 2n can end on even lines c = 2I, walks of length 2n - 1
on odd lines c = 2I + 1 (parity of k + l matches parity of the length).
The composition sums below weigh each composition by the number of height
profiles whose support touches level I, via the prefactor
(l_I + l_{I+1}) with the convention l_0 = l_{j+1} = 0; summing that
prefactor over all I recovers the unrestricted-walk weight.

For c != 0 the raw composition sum counts the mirror pair of lines
{c, -c} together, i.e. twice the single-line value; the public functions
halve it so that evaluation at Q = 1 equals the number of walks ending
exactly on k + l = c. The self-mirrored line c = 0 is counted once and
needs no halving. Pass raw=True to get the unhalved sums for debugging.
"""
from __future__ import annotations

from fractions import Fraction

from .compositions import cluster_coeff, compositions
from .enumeration import (
    _binomial_sum,
    _half_step_factor,
    _int_step_factor,
    _integral,
    gf_open,
)
from .laurent import AreaPolynomial


def _part(parts: tuple[int, ...], m: int) -> int:
    """Part l_m of a composition, with l_m = 0 outside 1 <= m <= j."""
    return parts[m - 1] if 1 <= m <= len(parts) else 0


def gf_diagonal(n: int) -> AreaPolynomial:
    """Area polynomial of the length-2n walks ending on the line k + l = 0.

    Same composition sum as the unrestricted even case, but weighted by
    l_1 instead of 2n: only profiles anchored at the bottom level
    contribute to the self-mirrored line.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    total = AreaPolynomial()
    for parts in compositions(n):
        l1 = parts[0]
        weight = _integral(Fraction(2**l1 * l1) * cluster_coeff(parts))
        poly = AreaPolynomial({0: weight})
        for i, l in enumerate(parts, start=1):
            poly = poly * _half_step_factor(i, l)
        total = total + poly
    return total


def count_diagonal(n: int, a2: int) -> int:
    """Number of length-2n walks ending on k + l = 0 with doubled area a2.

    Literal binomial multi-sum; agrees with coefficient extraction from
    gf_diagonal by construction of the factor expansion.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    total = 0
    for parts in compositions(n):
        l1 = parts[0]
        weight = _integral(Fraction(2**l1 * l1) * cluster_coeff(parts))
        total += weight * _binomial_sum(l1, parts[1:], a2, weight_odd_spacing=True)
    return total


def gf_paradiagonal_even(n: int, line_index: int, raw: bool = False) -> AreaPolynomial:
    """Area polynomial of length-2n walks ending on k + l = 2*line_index.

    Compositions shorter than line_index cannot reach the line and drop
    out through a vanishing prefactor. line_index=0 reduces to
    gf_diagonal. With raw=True the unhalved mirror-pair sum is returned
    (identical to the halved one at line_index=0).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if line_index < 0:
        raise ValueError(f"line_index must be >= 0, got {line_index}")
    total = AreaPolynomial()
    for parts in compositions(n):
        prefactor = _part(parts, line_index) + _part(parts, line_index + 1)
        if prefactor == 0:
            continue
        l1 = parts[0]
        weight = _integral(Fraction(2**l1 * prefactor) * cluster_coeff(parts))
        poly = AreaPolynomial({0: weight})
        for i, l in enumerate(parts, start=1):
            poly = poly * _half_step_factor(i, l)
        total = total + poly
    if raw or line_index == 0:
        return total
    return total.exact_half()


def gf_paradiagonal_odd(n: int, line_index: int, raw: bool = False) -> AreaPolynomial:
    """Area polynomial of length-(2n-1) walks ending on k + l = 2*line_index + 1.

    Compositions carry a distinguished bottom part l_0 whose effective
    size in the cluster weight is 2*l_0 - 1; the line_index=0 prefactor
    is (2*l_0 - 1 + l_1) accordingly. Support holds even exponents only.
    The raw sum always counts the mirror pair, so halving applies for
    every line_index unless raw=True.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if line_index < 0:
        raise ValueError(f"line_index must be >= 0, got {line_index}")
    total = AreaPolynomial()
    for comp in compositions(n):
        l0, rest = comp[0], comp[1:]
        if line_index == 0:
            prefactor = 2 * l0 - 1 + _part(rest, 1)
        else:
            prefactor = _part(rest, line_index) + _part(rest, line_index + 1)
        if prefactor == 0:
            continue
        weight = _integral(Fraction(prefactor) * cluster_coeff((2 * l0 - 1, *rest)))
        poly = AreaPolynomial({0: weight}) * _int_step_factor(0, l0)
        for i, l in enumerate(rest, start=1):
            poly = poly * _int_step_factor(i, l)
        total = total + poly
    if raw:
        return total
    return total.exact_half()


def sum_over_lines_check(n_steps: int) -> bool:
    """Check that the line-resolved polynomials resum to the open-walk one.

    Lines c and -c contribute equally, so every c > 0 enters twice and
    c = 0 once. Holds for both parities of n_steps.
    """
    if n_steps < 1:
        raise ValueError(f"n_steps must be >= 1, got {n_steps}")
    total = AreaPolynomial()
    if n_steps % 2 == 0:
        n = n_steps // 2
        total = gf_diagonal(n)
        for line_index in range(1, n + 1):
            total = total + 2 * gf_paradiagonal_even(n, line_index)
    else:
        n = (n_steps + 1) // 2
        for line_index in range(n):
            total = total + 2 * gf_paradiagonal_odd(n, line_index)
    return total == gf_open(n_steps)
