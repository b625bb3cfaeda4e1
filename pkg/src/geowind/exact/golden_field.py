"""Exact arithmetic over the quadratic field Q(sqrt 5)."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Any, Union

import mpmath
from pydantic import GetCoreSchemaHandler
from pydantic_core import CoreSchema, core_schema

Scalar = Union["GoldenRational", Fraction, int]

_RATIONAL = r"-?\d+(?:/\d+)?"
_EXACT_PATTERN = re.compile(rf"^\s*({_RATIONAL})\s*\+\s*({_RATIONAL})\s*\*\s*sqrt5\s*$")
_RATIONAL_PATTERN = re.compile(rf"^\s*({_RATIONAL})\s*$")


def _rational(value: Fraction | int) -> Fraction:
    if isinstance(value, bool):
        raise TypeError("booleans are not field elements")
    if isinstance(value, (Fraction, int)):
        return Fraction(value)
    raise TypeError(f"unsupported rational component: {type(value).__name__}")


@dataclass(frozen=True, slots=True, eq=False)
class GoldenRational:
    """The real number ``a + b*sqrt(5)`` with rational ``a`` and ``b``.

    Components are held as :class:`fractions.Fraction`, which keeps them reduced and
    backed by unbounded integers, so equality is structural.
    """

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", _rational(self.a))
        object.__setattr__(self, "b", _rational(self.b))

    @classmethod
    def __get_pydantic_core_schema__(
        cls, _source: Any, _handler: GetCoreSchemaHandler
    ) -> CoreSchema:
        return core_schema.is_instance_schema(cls)

    @classmethod
    def coerce(cls, value: Scalar) -> GoldenRational:
        if isinstance(value, GoldenRational):
            return value
        return cls(_rational(value))

    @classmethod
    def parse(cls, text: str) -> GoldenRational:
        """Parse ``"p/q + r/s*sqrt5"`` or a bare rational such as ``"7/3"``."""

        match = _EXACT_PATTERN.match(text)
        if match:
            return cls(Fraction(match.group(1)), Fraction(match.group(2)))
        match = _RATIONAL_PATTERN.match(text)
        if match:
            return cls(Fraction(match.group(1)))
        raise ValueError(f"not an exact Q(sqrt5) value: {text!r}")

    @property
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def conjugate(self) -> GoldenRational:
        return GoldenRational(self.a, -self.b)

    def norm(self) -> Fraction:
        """Field norm ``a^2 - 5 b^2``; zero only for the zero element."""

        return self.a * self.a - 5 * self.b * self.b

    def sign(self) -> int:
        return field_sign(self)

    def to_float(self) -> float:
        return field_to_float(self)

    def __str__(self) -> str:
        return f"{self.a} + {self.b}*sqrt5"

    def __repr__(self) -> str:
        return f"GoldenRational({self})"

    def __hash__(self) -> int:
        # Rational elements hash like the Fraction they equal.
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (GoldenRational, Fraction, int)) and not isinstance(other, bool):
            return field_eq(self, GoldenRational.coerce(other))
        return NotImplemented

    def __lt__(self, other: Scalar) -> bool:
        return field_sign(field_sub(self, GoldenRational.coerce(other))) < 0

    def __le__(self, other: Scalar) -> bool:
        return field_sign(field_sub(self, GoldenRational.coerce(other))) <= 0

    def __gt__(self, other: Scalar) -> bool:
        return field_sign(field_sub(self, GoldenRational.coerce(other))) > 0

    def __ge__(self, other: Scalar) -> bool:
        return field_sign(field_sub(self, GoldenRational.coerce(other))) >= 0

    def __add__(self, other: Scalar) -> GoldenRational:
        return field_add(self, GoldenRational.coerce(other))

    def __radd__(self, other: Scalar) -> GoldenRational:
        return field_add(GoldenRational.coerce(other), self)

    def __sub__(self, other: Scalar) -> GoldenRational:
        return field_sub(self, GoldenRational.coerce(other))

    def __rsub__(self, other: Scalar) -> GoldenRational:
        return field_sub(GoldenRational.coerce(other), self)

    def __mul__(self, other: Scalar) -> GoldenRational:
        return field_mul(self, GoldenRational.coerce(other))

    def __rmul__(self, other: Scalar) -> GoldenRational:
        return field_mul(GoldenRational.coerce(other), self)

    def __truediv__(self, other: Scalar) -> GoldenRational:
        return field_div(self, GoldenRational.coerce(other))

    def __rtruediv__(self, other: Scalar) -> GoldenRational:
        return field_div(GoldenRational.coerce(other), self)

    def __neg__(self) -> GoldenRational:
        return field_neg(self)

    def __pos__(self) -> GoldenRational:
        return self

    def __abs__(self) -> GoldenRational:
        return field_neg(self) if field_sign(self) < 0 else self

    def __pow__(self, exponent: int) -> GoldenRational:
        if exponent < 0:
            return field_div(ONE, self.__pow__(-exponent))
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = field_mul(result, base)
            base = field_mul(base, base)
            exponent >>= 1
        return result


def field_add(x: GoldenRational, y: GoldenRational) -> GoldenRational:
    return GoldenRational(x.a + y.a, x.b + y.b)


def field_sub(x: GoldenRational, y: GoldenRational) -> GoldenRational:
    return GoldenRational(x.a - y.a, x.b - y.b)


def field_neg(x: GoldenRational) -> GoldenRational:
    return GoldenRational(-x.a, -x.b)


def field_mul(x: GoldenRational, y: GoldenRational) -> GoldenRational:
    return GoldenRational(x.a * y.a + 5 * x.b * y.b, x.a * y.b + x.b * y.a)


def field_div(x: GoldenRational, y: GoldenRational) -> GoldenRational:
    """Divide by multiplying with the conjugate over the (rational) norm."""

    if y.is_zero:
        raise ZeroDivisionError("division by the zero element of Q(sqrt5)")
    norm = y.norm()
    numerator = field_mul(x, y.conjugate())
    return GoldenRational(numerator.a / norm, numerator.b / norm)


def field_eq(x: GoldenRational, y: GoldenRational) -> bool:
    return x.a == y.a and x.b == y.b


def field_sign(x: GoldenRational) -> int:
    sign_a = (x.a > 0) - (x.a < 0)
    sign_b = (x.b > 0) - (x.b < 0)
    if sign_b == 0 or sign_a == sign_b:
        return sign_a if sign_a else sign_b
    if sign_a == 0:
        return sign_b
    # Opposite signs: the larger magnitude wins; a^2 == 5 b^2 has no rational solution.
    return sign_a if x.a * x.a > 5 * x.b * x.b else sign_b


def _working_precision(*values: Fraction) -> int:
    bits = max(
        (max(value.numerator.bit_length(), value.denominator.bit_length()) for value in values),
        default=1,
    )
    return 128 + 2 * bits


def _to_mpf(x: GoldenRational) -> mpmath.mpf:
    a = mpmath.mpf(x.a.numerator) / x.a.denominator
    b = mpmath.mpf(x.b.numerator) / x.b.denominator
    root5 = mpmath.sqrt(5)
    if field_sign(GoldenRational(x.a)) * field_sign(GoldenRational(x.b)) < 0:
        # a - b*sqrt5 has no cancellation when a and b differ in sign.
        norm = x.norm()
        return (mpmath.mpf(norm.numerator) / norm.denominator) / (a - b * root5)
    return a + b * root5


def field_to_float(x: GoldenRational) -> float:
    """Nearest float64 to ``a + b*sqrt5``; only for export and report boundaries."""

    if x.b == 0:
        try:
            return float(x.a)
        except OverflowError:
            return math.copysign(math.inf, x.a)
    with mpmath.workprec(_working_precision(x.a, x.b, x.norm())):
        return float(_to_mpf(x))


def sqrt_to_float(x: GoldenRational) -> float:
    """Float64 of the square root of a non-negative element, for display values."""

    if field_sign(x) < 0:
        raise ValueError(f"square root of a negative element: {x}")
    if x.is_zero:
        return 0.0
    with mpmath.workprec(_working_precision(x.a, x.b, x.norm())):
        return float(mpmath.sqrt(_to_mpf(x)))


def _rational_sqrt(value: Fraction) -> Fraction | None:
    if value < 0:
        return None
    numerator_root = isqrt(value.numerator)
    denominator_root = isqrt(value.denominator)
    if numerator_root**2 != value.numerator or denominator_root**2 != value.denominator:
        return None
    return Fraction(numerator_root, denominator_root)


def field_sqrt_exact(x: GoldenRational) -> GoldenRational | None:
    """Non-negative square root of ``x`` if it is a perfect square in Q(sqrt5), else ``None``.

    Solves ``(p + q*sqrt5)^2 = a + b*sqrt5``, i.e. ``p^2 + 5q^2 = a`` and ``2pq = b``.
    """

    if x.is_zero:
        return ZERO
    if field_sign(x) < 0:
        return None
    norm_root = _rational_sqrt(x.norm())
    if norm_root is None:
        return None
    for p_squared in ((x.a + norm_root) / 2, (x.a - norm_root) / 2):
        p = _rational_sqrt(p_squared)
        q = _rational_sqrt((x.a - p_squared) / 5)
        if p is None or q is None:
            continue
        for candidate in (
            GoldenRational(p, q),
            GoldenRational(p, -q),
            GoldenRational(-p, q),
            GoldenRational(-p, -q),
        ):
            if field_sign(candidate) >= 0 and field_mul(candidate, candidate) == x:
                return candidate
    return None


ZERO = GoldenRational()
ONE = GoldenRational(Fraction(1))
SQRT5 = GoldenRational(Fraction(0), Fraction(1))
PHI = GoldenRational(Fraction(1, 2), Fraction(1, 2))
HALF_PHI = PHI / 2


__all__ = [
    "HALF_PHI",
    "ONE",
    "PHI",
    "SQRT5",
    "ZERO",
    "GoldenRational",
    "Scalar",
    "field_add",
    "field_div",
    "field_eq",
    "field_mul",
    "field_neg",
    "field_sign",
    "field_sqrt_exact",
    "field_sub",
    "field_to_float",
    "sqrt_to_float",
]
