"""Exact complex rationals p + q*i with p, q in Q.

Only the operator-model bridge produces these: moments of Hermitian matrices
under a complex vector state are complex in general, and carrying them as
exact pairs keeps the series pipeline free of rounding.  Every arithmetic
result whose imaginary part vanishes collapses back to a plain ``Fraction``.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        return Fraction(repr(x))
    return Fraction(x)


def _collapse(re: Fraction, im: Fraction):
    if im == 0:
        return re
    return GaussianRational(re, im)


class GaussianRational:
    __slots__ = ("real", "imag")

    def __init__(self, real, imag=0):
        self.real = _frac(real)
        self.imag = _frac(imag)

    @classmethod
    def from_complex(cls, z: complex):
        """Decimal-derived exact value of a floating complex number."""
        return _collapse(_frac(float(z.real)), _frac(float(z.imag)))

    @staticmethod
    def _parts(other):
        if isinstance(other, GaussianRational):
            return other.real, other.imag
        if isinstance(other, (Rational, int)):
            return Fraction(other), Fraction(0)
        return None

    def __add__(self, other):
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        return _collapse(self.real + parts[0], self.imag + parts[1])

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.real, -self.imag)

    def __sub__(self, other):
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        return _collapse(self.real - parts[0], self.imag - parts[1])

    def __rsub__(self, other):
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        return _collapse(parts[0] - self.real, parts[1] - self.imag)

    def __mul__(self, other):
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        a, b = self.real, self.imag
        c, d = parts
        return _collapse(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        c, d = parts
        denom = c * c + d * d
        if denom == 0:
            raise ZeroDivisionError("division by zero")
        a, b = self.real, self.imag
        return _collapse((a * c + b * d) / denom, (b * c - a * d) / denom)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = Fraction(1)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        return self.real == parts[0] and self.imag == parts[1]

    def __hash__(self):
        if self.imag == 0:
            return hash(self.real)
        return hash((self.real, self.imag))

    def __bool__(self):
        return bool(self.real) or bool(self.imag)

    def __complex__(self):
        return complex(float(self.real), float(self.imag))

    def conjugate(self):
        return GaussianRational(self.real, -self.imag)

    def __repr__(self):
        return f"GaussianRational({self.real}, {self.imag})"

    def __str__(self):
        sign = "+" if self.imag >= 0 else "-"
        return f"{self.real}{sign}{abs(self.imag)}i"
