"""Exact Laurent polynomials in the area-dual variable Q.

Conventions:
  - Exponents are the *doubled* algebraic area t = 2A, always an integer,
    so half-integer areas never need fractional powers of Q.
  - Coefficients are exact Python ints (arbitrary precision). Enumeration
    outputs have nonnegative coefficients; intermediates may not.
  - The zero coefficient is never stored; the empty polynomial is zero.
"""
from __future__ import annotations

import cmath
import math
from typing import Iterator, Mapping


class AreaPolynomial:
    """Sparse Laurent polynomial sum_t c_t Q^t with integer t and exact int c_t.

    Instances are immutable; all arithmetic returns new objects, so values
    can be shared freely across threads.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        cleaned = {}
        if coeffs:
            for t, c in coeffs.items():
                if not isinstance(t, int) or isinstance(t, bool):
                    raise TypeError(f"exponent {t!r} is not an int")
                if not isinstance(c, int) or isinstance(c, bool):
                    raise TypeError(f"coefficient {c!r} is not an int")
                if c != 0:
                    cleaned[t] = c
        self._coeffs = cleaned

    # -- basic queries ----------------------------------------------------

    def coefficient(self, t: int) -> int:
        """The coefficient of Q^t (0 if t is outside the support)."""
        return self._coeffs.get(t, 0)

    def support(self) -> list[int]:
        """Sorted list of exponents with nonzero coefficient."""
        return sorted(self._coeffs)

    def items(self) -> Iterator[tuple[int, int]]:
        """(t, coefficient) pairs in ascending t order."""
        return iter(sorted(self._coeffs.items()))

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_palindromic(self) -> bool:
        """True if coefficient(t) == coefficient(-t) for every t."""
        return all(self._coeffs.get(-t) == c for t, c in self._coeffs.items())

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, AreaPolynomial):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __repr__(self) -> str:
        inner = ", ".join(f"{t}: {c}" for t, c in sorted(self._coeffs.items()))
        return f"AreaPolynomial({{{inner}}})"

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: AreaPolynomial) -> AreaPolynomial:
        if not isinstance(other, AreaPolynomial):
            return NotImplemented
        out = dict(self._coeffs)
        for t, c in other._coeffs.items():
            s = out.get(t, 0) + c
            if s:
                out[t] = s
            else:
                out.pop(t, None)
        return _raw(out)

    def __sub__(self, other: AreaPolynomial) -> AreaPolynomial:
        if not isinstance(other, AreaPolynomial):
            return NotImplemented
        out = dict(self._coeffs)
        for t, c in other._coeffs.items():
            s = out.get(t, 0) - c
            if s:
                out[t] = s
            else:
                out.pop(t, None)
        return _raw(out)

    def __neg__(self) -> AreaPolynomial:
        return _raw({t: -c for t, c in self._coeffs.items()})

    def __mul__(self, other: AreaPolynomial | int) -> AreaPolynomial:
        if isinstance(other, int) and not isinstance(other, bool):
            if other == 0:
                return _raw({})
            return _raw({t: c * other for t, c in self._coeffs.items()})
        if not isinstance(other, AreaPolynomial):
            return NotImplemented
        # Sparse convolution; iterate the smaller support on the outside.
        a, b = self._coeffs, other._coeffs
        if len(a) > len(b):
            a, b = b, a
        out: dict[int, int] = {}
        for ta, ca in a.items():
            for tb, cb in b.items():
                t = ta + tb
                s = out.get(t, 0) + ca * cb
                if s:
                    out[t] = s
                else:
                    out.pop(t, None)
        return _raw(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> AreaPolynomial:
        if not isinstance(e, int) or e < 0:
            raise ValueError(f"exponent must be a nonnegative integer, got {e!r}")
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shifted(self, dt: int) -> AreaPolynomial:
        """Multiply by Q^dt, i.e. shift every exponent by dt."""
        if dt == 0:
            return self
        return _raw({t + dt: c for t, c in self._coeffs.items()})

    def mirrored(self) -> AreaPolynomial:
        """Substitute Q -> Q^{-1} (reflection t -> -t)."""
        return _raw({-t: c for t, c in self._coeffs.items()})

    def exact_half(self) -> AreaPolynomial:
        """Divide every coefficient by 2, requiring exact divisibility."""
        out = {}
        for t, c in self._coeffs.items():
            if c % 2:
                raise ValueError(f"coefficient {c} at t={t} is not divisible by 2")
            out[t] = c // 2
        return _raw(out)

    # -- evaluation ---------------------------------------------------------

    def eval_at_one(self) -> int:
        """Sum of all coefficients (the total walk count for enumeration output)."""
        return sum(self._coeffs.values())

    def eval_at_root(self, p: int, s: int) -> complex:
        """Evaluate at Q = exp(i 2 pi p (s+1) / (2s+1)), the traced-representation root.

        Requires gcd(p, 2s+1) = 1 and s >= 1.
        """
        q = root_of_unity(p, s)
        return self.eval_at(q)

    def eval_at(self, q: complex) -> complex:
        """Numerical evaluation at an arbitrary complex Q, exponents as written."""
        return sum(c * q**t for t, c in self._coeffs.items())

    # -- serialization -------------------------------------------------------

    def to_json_dict(self) -> dict:
        """{"coeffs": {"<t>": "<decimal count>"}} with string-encoded integers."""
        return {"coeffs": {str(t): str(c) for t, c in sorted(self._coeffs.items())}}

    @classmethod
    def from_json_dict(cls, payload: Mapping) -> AreaPolynomial:
        return cls({int(t): int(c) for t, c in payload["coeffs"].items()})


def _raw(coeffs: dict[int, int]) -> AreaPolynomial:
    # Internal constructor bypassing validation; callers guarantee no zeros.
    poly = AreaPolynomial.__new__(AreaPolynomial)
    poly._coeffs = coeffs
    return poly


ZERO = AreaPolynomial()
ONE = AreaPolynomial({0: 1})


def monomial(t: int, c: int = 1) -> AreaPolynomial:
    """The single-term polynomial c Q^t."""
    return AreaPolynomial({t: c})


def root_of_unity(p: int, s: int) -> complex:
    """Q = exp(i 2 pi p (s+1) / (2s+1)), the square root of Q^2 = exp(i 2 pi p / (2s+1))
    singled out by the (2s+1)-dimensional traced representation. Q^(2s+1) = 1.
    """
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    q = 2 * s + 1
    if math.gcd(p, q) != 1:
        raise ValueError(f"p={p} and 2s+1={q} must be coprime")
    return cmath.exp(2j * cmath.pi * p * (s + 1) / q)
