"""Compositions of an integer and the cluster coefficients weighting them.

A composition of n is an ordered tuple of positive integers (l_1, ..., l_j)
with sum n; there are 2^(n-1) of them. Each one indexes a family of periodic
index paths with l_i transitions between levels i-1 and i, and the rational
cluster coefficient c(l_1, ..., l_j) is the per-step count of those paths:
2n * c(l_1, ..., l_j) is a positive integer.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterator, Sequence


def binomial(n: int, k: int) -> int:
    """Binomial coefficient, zero whenever the entries are out of range."""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def compositions(n: int) -> Iterator[tuple[int, ...]]:
    """Yield every composition of n exactly once, descending-first lexicographic.

    The order is generated from the binary masks of the n-1 possible
    separators: mask 0 gives (n), mask 2^(n-1)-1 gives (1, ..., 1), and
    for n = 3 the stream is (3), (2, 1), (1, 2), (1, 1, 1). Consumers
    summing over the full stream may partition the mask range.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    for mask in range(1 << (n - 1)):
        parts = []
        prev = 0
        for pos in range(1, n):
            if (mask >> (n - 1 - pos)) & 1:
                parts.append(pos - prev)
                prev = pos
        parts.append(n - prev)
        yield tuple(parts)


def cluster_coeff(parts: Sequence[int]) -> Fraction:
    """c(l_1, ..., l_j) = (1/l_1) prod_{i=1}^{j-1} C(l_i + l_{i+1} - 1, l_{i+1}), exact."""
    _check_parts(parts)
    prod = Fraction(1, parts[0])
    for i in range(len(parts) - 1):
        prod *= binomial(parts[i] + parts[i + 1] - 1, parts[i + 1])
    return prod


def cluster_coeff_alt(parts: Sequence[int]) -> Fraction:
    """The mirrored product (1/l_j) prod C(l_i + l_{i+1} - 1, l_i); cross-check only."""
    _check_parts(parts)
    prod = Fraction(1, parts[-1])
    for i in range(len(parts) - 1):
        prod *= binomial(parts[i] + parts[i + 1] - 1, parts[i])
    return prod


def cluster_coeff_bar(l0: int, rest: Sequence[int] = ()) -> Fraction:
    """c-bar(l_0, l_1, ..., l_j) = c(2 l_0 - 1, l_1, ..., l_j).

    Weights the odd-length sums: paths with 2 l_0 - 1 top-level creep steps
    map, via mirror image, to paths touching zero with first part 2 l_0 - 1.
    """
    if l0 < 1:
        raise ValueError(f"l0 must be >= 1, got {l0}")
    return cluster_coeff((2 * l0 - 1, *rest))


def _check_parts(parts: Sequence[int]) -> None:
    if not parts:
        raise ValueError("a composition has at least one part")
    if any(p < 1 for p in parts):
        raise ValueError(f"composition parts must be positive, got {tuple(parts)}")
