#!/usr/bin/env python3
"""
Univariate polynomials over the rationals with Sturm sequences.

Coefficients are stored lowest degree first; the textual format used by the
command line lists them leading coefficient first. Arithmetic, division, gcd,
square-free parts and Sturm chains run on sympy's dense representation over QQ.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Any, Iterable, List, Sequence, Tuple

from sympy.polys.densearith import (
    dup_add,
    dup_div,
    dup_lshift,
    dup_mul,
    dup_mul_ground,
    dup_neg,
    dup_pow,
    dup_sub,
)
from sympy.polys.densebasic import dup_LC, dup_strip
from sympy.polys.densetools import (
    dup_clear_denoms,
    dup_diff,
    dup_eval,
    dup_monic,
    dup_primitive,
    dup_sign_variations,
)
from sympy.polys.domains import QQ, ZZ
from sympy.polys.euclidtools import dup_gcd
from sympy.polys.rootisolation import dup_sturm
from sympy.polys.sqfreetools import dup_sqf_part

from ..errors import DivisionByZero, InputError

Interval = Tuple[Fraction, Fraction]


def _normalize(coeffs: Iterable[Any]) -> Tuple[Fraction, ...]:
    values = [Fraction(c) for c in coeffs]
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


def _qq(value: Any) -> Any:
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def _fraction(value: Any) -> Fraction:
    return Fraction(int(QQ.numer(value)), int(QQ.denom(value)))


def _sign(value: Any) -> int:
    if QQ.is_positive(value):
        return 1
    return -1 if QQ.is_negative(value) else 0


@dataclass(frozen=True)
class Polynomial:
    """Immutable polynomial with rational coefficients (lowest degree first)."""

    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _normalize(self.coeffs))

    # Construction
    @classmethod
    def from_leading_first(cls, coeffs: Sequence[Any]) -> "Polynomial":
        return cls(tuple(reversed(list(coeffs))))

    @classmethod
    def from_dense(cls, rep: Sequence[Any]) -> "Polynomial":
        """From a leading-first dense list over QQ."""
        return cls(tuple(_fraction(c) for c in reversed(dup_strip(list(rep)))))

    @classmethod
    def constant(cls, value: Any) -> "Polynomial":
        return cls((value,))

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((0, 1))

    @cached_property
    def dense(self) -> List[Any]:
        """Leading-first coefficients as QQ elements."""
        return [_qq(c) for c in reversed(self.coeffs)]

    # Basic properties
    @property
    def degree(self) -> int:
        """Degree, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def leading_first(self) -> List[Fraction]:
        return list(reversed(self.coeffs))

    def __call__(self, x: Any) -> Any:
        """Value at x; Horner evaluation for ring elements that mix with Fraction."""
        if isinstance(x, (int, Fraction)):
            return _fraction(dup_eval(self.dense, _qq(x), QQ))
        if not self.coeffs:
            return Fraction(0)
        acc: Any = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def sign_at(self, x: Fraction) -> int:
        return _sign(dup_eval(self.dense, _qq(x), QQ))

    # Arithmetic
    def __add__(self, other: "Polynomial") -> "Polynomial":
        return Polynomial.from_dense(dup_add(self.dense, other.dense, QQ))

    def __neg__(self) -> "Polynomial":
        return Polynomial.from_dense(dup_neg(self.dense, QQ))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return Polynomial.from_dense(dup_sub(self.dense, other.dense, QQ))

    def __mul__(self, other: Any) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return self.scale(other)
        return Polynomial.from_dense(dup_mul(self.dense, other.dense, QQ))

    __rmul__ = __mul__

    def scale(self, factor: Any) -> "Polynomial":
        return Polynomial.from_dense(dup_mul_ground(self.dense, _qq(factor), QQ))

    def shift_degree(self, n: int) -> "Polynomial":
        """Multiply by x**n."""
        return Polynomial.from_dense(dup_lshift(self.dense, n, QQ))

    def __pow__(self, exponent: int) -> "Polynomial":
        return Polynomial.from_dense(dup_pow(self.dense, exponent, QQ))

    def divmod(self, divisor: "Polynomial") -> Tuple["Polynomial", "Polynomial"]:
        """Exact long division over the rationals."""
        if divisor.is_zero:
            raise DivisionByZero("polynomial division by zero")
        quotient, remainder = dup_div(self.dense, divisor.dense, QQ)
        return Polynomial.from_dense(quotient), Polynomial.from_dense(remainder)

    def __floordiv__(self, divisor: "Polynomial") -> "Polynomial":
        return self.divmod(divisor)[0]

    def __mod__(self, divisor: "Polynomial") -> "Polynomial":
        return self.divmod(divisor)[1]

    def derivative(self) -> "Polynomial":
        return Polynomial.from_dense(dup_diff(self.dense, 1, QQ))

    def monic(self) -> "Polynomial":
        return Polynomial.from_dense(dup_monic(self.dense, QQ))

    def gcd(self, other: "Polynomial") -> "Polynomial":
        """Monic greatest common divisor."""
        return Polynomial.from_dense(dup_monic(dup_gcd(self.dense, other.dense, QQ), QQ))

    def square_free(self) -> "Polynomial":
        """Square-free part, in primitive integer form."""
        if self.degree < 1:
            return self.primitive()
        return Polynomial.from_dense(dup_sqf_part(self.dense, QQ)).primitive()

    def primitive(self) -> "Polynomial":
        """Integer coefficients with content 1 and positive leading coefficient."""
        if self.is_zero:
            return self
        _, integers = dup_clear_denoms(self.dense, QQ, ZZ, convert=True)
        _, integers = dup_primitive(integers, ZZ)
        if ZZ.is_negative(dup_LC(integers, ZZ)):
            integers = dup_neg(integers, ZZ)
        return Polynomial.from_leading_first([int(c) for c in integers])

    def integer_coefficients(self) -> Tuple[int, ...]:
        """Leading-first integer coefficients of the primitive form."""
        return tuple(int(c) for c in reversed(self.primitive().coeffs))

    # Real roots
    @cached_property
    def _sturm(self) -> List[List[Any]]:
        if self.degree < 1:
            return [self.dense]
        return dup_sturm(self.dense, QQ)

    def sign_variations(self, x: Fraction) -> int:
        """Sign changes of the Sturm chain at x, zeros dropped."""
        point = _qq(x)
        return dup_sign_variations([dup_eval(p, point, QQ) for p in self._sturm], QQ)

    def count_roots(self, lo: Fraction, hi: Fraction) -> int:
        """Distinct real roots in the half-open interval (lo, hi]."""
        if hi <= lo:
            return 0
        return self.sign_variations(lo) - self.sign_variations(hi)

    def count_roots_closed(self, lo: Fraction, hi: Fraction) -> int:
        """Distinct real roots in [lo, hi]."""
        at_lo = 1 if self.sign_at(lo) == 0 else 0
        if hi == lo:
            return at_lo
        return at_lo + self.count_roots(lo, hi)

    def cauchy_bound(self) -> Fraction:
        """Every real root lies in [-B, B]."""
        if self.degree < 1:
            return Fraction(1)
        lead = abs(self.leading)
        ratio = sum(abs(c) for c in self.coeffs[:-1]) / lead
        return 1 + max(Fraction(1), ratio)

    def evaluate_interval(self, lo: Fraction, hi: Fraction) -> Interval:
        """Enclosure of the image of [lo, hi] by Horner interval arithmetic."""
        if not self.coeffs:
            return Fraction(0), Fraction(0)
        acc_lo = acc_hi = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            products = (acc_lo * lo, acc_lo * hi, acc_hi * lo, acc_hi * hi)
            acc_lo = min(products) + c
            acc_hi = max(products) + c
        return acc_lo, acc_hi

    def __str__(self) -> str:
        return format_polynomial(self)


def parse_polynomial(text: str) -> Polynomial:
    """Parse comma-separated coefficients, leading first (e.g. ``1,0,-2,-1,-1``)."""
    try:
        coeffs = [Fraction(part.strip()) for part in text.split(",") if part.strip()]
    except (ValueError, ZeroDivisionError) as e:
        raise InputError(f"invalid polynomial {text!r}: {e}") from e
    if not coeffs:
        raise InputError(f"invalid polynomial {text!r}: no coefficients")
    return Polynomial.from_leading_first(coeffs)


def format_polynomial(poly: Polynomial) -> str:
    """Comma-separated coefficients, leading first."""
    if poly.is_zero:
        return "0"
    return ",".join(_format_rational(c) for c in poly.leading_first())


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise InputError(f"invalid rational {text!r}") from e


def parse_interval(text: str) -> Interval:
    """Parse ``lo:hi`` with rational endpoints (e.g. ``17/10:9/5``)."""
    parts = text.split(":")
    if len(parts) != 2:
        raise InputError(f"invalid interval {text!r}: expected lo:hi")
    lo, hi = parse_rational(parts[0]), parse_rational(parts[1])
    if lo > hi:
        raise InputError(f"invalid interval {text!r}: lo > hi")
    return lo, hi


def _format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_rational(value: Fraction) -> str:
    return _format_rational(Fraction(value))
