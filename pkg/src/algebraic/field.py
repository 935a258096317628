#!/usr/bin/env python3
"""
Arithmetic in the number field Q(a) generated by a real algebraic number.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Any, Sequence, Tuple

from ..errors import DivisionByZero, FieldMismatch
from .polynomial import Interval, Polynomial
from .real import AlgebraicReal, format_decimal, minimal_polynomial


@dataclass(frozen=True, eq=False)
class NumberField:
    """Q(generator); elements are reduced modulo the generator's minimal polynomial."""

    generator: AlgebraicReal

    def __post_init__(self):
        if not self.generator.irreducible_verified:
            raise FieldMismatch(
                "number field generator must carry a verified irreducible polynomial",
                poly=self.generator.defining_poly,
            )

    @classmethod
    def of(cls, a: AlgebraicReal) -> "NumberField":
        return cls(minimal_polynomial(a))

    @cached_property
    def modulus(self) -> Polynomial:
        return self.generator.poly.monic()

    @property
    def degree(self) -> int:
        return self.modulus.degree

    def element(self, coeffs: Sequence[Any]) -> "FieldElement":
        """Element from coefficients of generator powers, lowest first."""
        return FieldElement(self, tuple(Fraction(c) for c in coeffs))

    def from_rational(self, value: Any) -> "FieldElement":
        return self.element((value,))

    def from_polynomial(self, poly: Polynomial) -> "FieldElement":
        return self.element((poly % self.modulus).coeffs)

    def zero(self) -> "FieldElement":
        return self.element(())

    def one(self) -> "FieldElement":
        return self.from_rational(1)

    def gen(self) -> "FieldElement":
        """The generator itself."""
        return self.from_polynomial(Polynomial.x())

    def __eq__(self, other: Any) -> bool:
        if self is other:
            return True
        if not isinstance(other, NumberField):
            return NotImplemented
        return self.modulus == other.modulus and self.generator == other.generator

    def __hash__(self) -> int:
        return hash(self.modulus)

    def __repr__(self) -> str:
        return f"NumberField({self.generator!r})"


@dataclass(frozen=True, eq=False)
class FieldElement:
    """Rational coefficient vector over powers of the generator."""

    field: NumberField
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        degree = self.field.degree
        values = [Fraction(c) for c in self.coeffs]
        if len(values) > degree:
            reduced = Polynomial(tuple(values)) % self.field.modulus
            values = list(reduced.coeffs)
        values += [Fraction(0)] * (degree - len(values))
        object.__setattr__(self, "coeffs", tuple(values))

    @cached_property
    def polynomial(self) -> Polynomial:
        return Polynomial(self.coeffs)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def _coerce(self, other: Any) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatch("operands belong to different number fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        raise TypeError(f"cannot combine FieldElement with {type(other).__name__}")

    # Arithmetic
    def __add__(self, other: Any) -> "FieldElement":
        other = self._coerce(other)
        return FieldElement(self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.field, tuple(-c for c in self.coeffs))

    def __sub__(self, other: Any) -> "FieldElement":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Any) -> "FieldElement":
        return self._coerce(other) - self

    def __mul__(self, other: Any) -> "FieldElement":
        other = self._coerce(other)
        if self.field.degree == 1:
            return FieldElement(self.field, (self.coeffs[0] * other.coeffs[0],))
        return self.field.from_polynomial(self.polynomial * other.polynomial)

    __rmul__ = __mul__

    @cached_property
    def inverse(self) -> "FieldElement":
        """Multiplicative inverse by the extended Euclidean algorithm."""
        if self.is_zero:
            raise DivisionByZero("inverse of zero field element")
        # Invariant: s * self == r (mod modulus)
        r0, r1 = self.field.modulus, self.polynomial
        s0, s1 = Polynomial(()), Polynomial.constant(1)
        while not r1.is_zero:
            quotient, remainder = r0.divmod(r1)
            r0, r1 = r1, remainder
            s0, s1 = s1, s0 - quotient * s1
        # r0 is a nonzero constant since the modulus is irreducible
        return self.field.from_polynomial(s0.scale(1 / r0.leading))

    def __truediv__(self, other: Any) -> "FieldElement":
        return self * self._coerce(other).inverse

    def __rtruediv__(self, other: Any) -> "FieldElement":
        return self._coerce(other) * self.inverse

    def __pow__(self, exponent: int) -> "FieldElement":
        if exponent < 0:
            return self.inverse ** (-exponent)
        result = self.field.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # Comparison
    def sign(self) -> int:
        return sign_of(self)

    def enclosure(self, level: int) -> Interval:
        """Rational interval containing the element, from the generator at refinement ``level``."""
        lo, hi = self.field.generator.interval_at(level)
        return self.polynomial.evaluate_interval(lo, hi)

    def as_rational(self) -> Fraction:
        """Rational value; only defined for elements in the prime field."""
        if any(c != 0 for c in self.coeffs[1:]):
            raise ValueError("field element is not rational")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    @property
    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational and self.as_rational() == other
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.field is not self.field and other.field != self.field:
            return False
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __lt__(self, other: Any) -> bool:
        return sign_of(self - other) < 0

    def __le__(self, other: Any) -> bool:
        return sign_of(self - other) <= 0

    def __gt__(self, other: Any) -> bool:
        return sign_of(self - other) > 0

    def __ge__(self, other: Any) -> bool:
        return sign_of(self - other) >= 0

    def __repr__(self) -> str:
        return f"FieldElement({', '.join(str(c) for c in self.coeffs)})"


def sign_of(e: FieldElement) -> int:
    """Certified sign: refine the generator until the image interval excludes zero."""
    if e.is_zero:
        return 0
    if e.is_rational:
        value = e.coeffs[0]
        return (value > 0) - (value < 0)
    generator = e.field.generator
    if generator.lo == generator.hi:
        value = e.polynomial(generator.lo)
        return (value > 0) - (value < 0)
    level = 0
    while True:
        lo, hi = e.enclosure(level)
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        level += 1


def element_to_decimal(e: FieldElement, digits: int) -> str:
    """Decimal rendering of a field element rounded to ``digits`` places."""
    if e.is_rational:
        return format_decimal(e.coeffs[0], digits)
    bound = Fraction(1, 10 ** (digits + 3))
    level = 0
    while True:
        lo, hi = e.enclosure(level)
        if hi - lo < bound:
            return format_decimal((lo + hi) / 2, digits)
        level += 1
