"""Truncated power series with exact rational coefficients.

A Series of order N carries coefficients of t^0 .. t^N as Fractions.
Multiplication truncates at N; exp is defined by the derivative recurrence
B' = A' B (with B(0) = exp(A(0)) = 1, requiring A(0) = 0), which stays in
rational arithmetic.  The square-root route for specific series lives in
the test suite as an oracle; it is not needed by the library itself.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Sequence


def catalan(m: int) -> int:
    """The m-th Catalan number, binom(2m, m)/(m+1) as an exact integer.

    >>> [catalan(m) for m in range(7)]
    [1, 1, 2, 5, 14, 42, 132]
    """
    if m < 0:
        raise ValueError("need m >= 0")
    return comb(2 * m, m) // (m + 1)


class Series:
    """Coefficients c[0..order] of a truncated power series in t."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence, order: int | None = None):
        coeffs = [Fraction(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be >= 0")
        coeffs = coeffs[: order + 1]
        coeffs += [Fraction(0)] * (order + 1 - len(coeffs))
        self.order = order
        self.coeffs = tuple(coeffs)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Series)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __repr__(self) -> str:
        return "Series(%r)" % (list(self.coeffs),)

    def _coerce(self, other) -> "Series":
        if isinstance(other, Series):
            if other.order != self.order:
                raise ValueError("orders differ: %d vs %d" % (self.order, other.order))
            return other
        return Series([other], order=self.order)

    def __add__(self, other) -> "Series":
        other = self._coerce(other)
        return Series(
            [a + b for a, b in zip(self.coeffs, other.coeffs)], self.order
        )

    def __radd__(self, other) -> "Series":
        return self + other

    def __sub__(self, other) -> "Series":
        other = self._coerce(other)
        return Series(
            [a - b for a, b in zip(self.coeffs, other.coeffs)], self.order
        )

    def __rsub__(self, other) -> "Series":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Series":
        if not isinstance(other, Series):
            return Series([c * Fraction(other) for c in self.coeffs], self.order)
        other = self._coerce(other)
        n = self.order
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(0, n - i + 1):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return Series(out, n)

    def __rmul__(self, other) -> "Series":
        return self * other

    def shift(self, by: int = 1) -> "Series":
        """Multiply by t^by (same truncation order)."""
        if by < 0:
            raise ValueError("shift must be >= 0")
        return Series([Fraction(0)] * by + list(self.coeffs), self.order)


def series_exp(a: Series) -> Series:
    """exp of a series with zero constant term, via b_k = (1/k) sum_j j a_j b_{k-j}.

    >>> t = Series([0, 1], order=4)
    >>> series_exp(t).coeffs == (1, 1, Fraction(1, 2), Fraction(1, 6), Fraction(1, 24))
    True
    """
    if a.coeffs[0] != 0:
        raise ValueError("series_exp needs a zero constant term")
    n = a.order
    b = [Fraction(1)] + [Fraction(0)] * n
    for k in range(1, n + 1):
        acc = Fraction(0)
        for j in range(1, k + 1):
            if a.coeffs[j]:
                acc += j * a.coeffs[j] * b[k - j]
        b[k] = acc / k
    return Series(b, n)


def catalan_series(order: int) -> Series:
    """C(t) = sum_m Catalan(m) t^m, truncated."""
    return Series([catalan(m) for m in range(order + 1)], order)