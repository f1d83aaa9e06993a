"""Exact arithmetic in Q(i).

Rationals are :class:`fractions.Fraction` (always in lowest terms with a
positive denominator). :class:`GaussianRational` pairs two of them.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Union

BigRational = Fraction

RationalLike = Union[int, Fraction, str]


def to_rational(value: RationalLike) -> Fraction:
    """Parse ``"p/q"``, ``"p"``, an int or a Fraction into a Fraction."""
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as a rational")


def rational_to_str(q: Fraction) -> str:
    return str(q)


class GaussianRational:
    """Immutable complex number ``re + im*i`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: RationalLike = 0, im: RationalLike = 0):
        object.__setattr__(self, "re", to_rational(re))
        object.__setattr__(self, "im", to_rational(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def coerce(cls, value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, complex):
            return cls(Fraction(value.real), Fraction(value.imag))
        if isinstance(value, float):
            return cls(Fraction(value))
        return cls(value)

    # arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = _maybe(other)
        if other is NotImplemented:
            return other
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _maybe(other)
        if other is NotImplemented:
            return other
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _maybe(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = _maybe(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.re, self.im, other.re, other.im
        return GaussianRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _maybe(other)
        if other is NotImplemented:
            return other
        den = other.abs_sq()
        if den == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        a, b, c, d = self.re, self.im, other.re, other.im
        return GaussianRational((a * c + b * d) / den, (b * c - a * d) / den)

    def __rtruediv__(self, other):
        other = _maybe(other)
        if other is NotImplemented:
            return other
        return other / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return ONE / (self ** -exponent)
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conj(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def abs_sq(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    # comparisons / conversions ----------------------------------------

    def __eq__(self, other):
        other = _maybe(other)
        if other is NotImplemented:
            return other
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return not self.is_zero()

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussianRational({str(self.re)!r}, {str(self.im)!r})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}*i"
        sign = "+" if self.im > 0 else "-"
        return f"({self.re} {sign} {abs(self.im)}*i)"

    def to_json(self) -> dict:
        return {"re": str(self.re), "im": str(self.im)}

    @classmethod
    def from_json(cls, obj) -> "GaussianRational":
        if isinstance(obj, dict):
            return cls(_json_rational(obj.get("re", "0")), _json_rational(obj.get("im", "0")))
        return cls(_json_rational(obj))


def _json_rational(value) -> Fraction:
    if isinstance(value, float):
        raise ValueError(f"floats are not accepted as exact rationals: {value!r}")
    return to_rational(value)


def _maybe(value):
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return GaussianRational(value)
    return NotImplemented


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def gq_arith(op: str, a: GaussianRational, b: GaussianRational) -> GaussianRational:
    """Apply ``op`` in {"add", "sub", "mul", "div"}.

    Division by zero raises :class:`ZeroDivisionError`.
    """
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def gq_conj(a: GaussianRational) -> GaussianRational:
    return a.conj()


def gq_abs_sq(a: GaussianRational) -> Fraction:
    return a.abs_sq()
