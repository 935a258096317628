#!/usr/bin/env python3
"""
Parametric two-expansion equations and their roots above p1.

A family (k, j, u, v) encodes the identity

    (1 0^k u L^inf)_q = (0 reflect(0^j v R^inf))_q

with tails L, R fixed by the variant. Cleared of denominators it reads

    C(q) + q^-(k+s) A_u(q) + q^-(j+s) B_v(q) = 0,

which is strictly increasing in q above p1.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Tuple, Union

from cachetools import LRUCache, cached

from ..algebraic import (
    AlgebraicReal,
    FieldElement,
    NumberField,
    Polynomial,
    isolate_roots,
    minimal_polynomial,
    sign_of,
)
from ..config.env import get_settings
from ..errors import InvalidFamily, NoRoot
from ..expansions import Alphabet, DigitSeq, reflect
from ..utils.logger import get_logger
from .critical import p1

logger = get_logger(__name__)
settings = get_settings()

_roots_cache: LRUCache = LRUCache(maxsize=settings.MULTIBASE_CACHE_SIZE)


class FamilyVariant(str, Enum):
    """Tail combination of a family."""

    EVEN = "even"
    ODD1 = "odd1"  # (m(m-1))^inf on both sides
    ODD2 = "odd2"  # ((m-1)m)^inf on both sides
    ODD3 = "odd3"  # (m(m-1))^inf left, ((m-1)m)^inf right

    @property
    def rank(self) -> int:
        return list(FamilyVariant).index(self)

    @property
    def is_odd(self) -> bool:
        return self is not FamilyVariant.EVEN


@dataclass(frozen=True)
class FamilyId:
    variant: FamilyVariant
    k: int
    j: int
    u: int
    v: int

    def validate(self, M: int) -> Alphabet:
        """Check parameter ranges for the alphabet {0..M}."""
        alphabet = Alphabet(M)
        if self.variant.is_odd == alphabet.is_even:
            raise InvalidFamily(f"variant {self.variant.value} does not apply to M={M}")
        if self.k < 0 or self.j < 0:
            raise InvalidFamily(f"k and j must be non-negative in {self}")
        largest = alphabet.m if alphabet.is_even else alphabet.m - 1
        if not (0 <= self.u <= largest and 0 <= self.v <= largest):
            raise InvalidFamily(f"u and v must lie in 0..{largest} for M={M}, got {self}")
        return alphabet

    @property
    def sort_key(self) -> Tuple[int, int, int, int, int]:
        return (self.variant.rank, self.j, self.k, self.u, self.v)

    def mirrored(self) -> "FamilyId":
        return FamilyId(self.variant, self.j, self.k, self.v, self.u)

    def __str__(self) -> str:
        return f"{self.variant.value}({self.k},{self.j},{self.u},{self.v})"


def _tails(variant: FamilyVariant, m: int) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    high, low = (m, m - 1), (m - 1, m)
    return {
        FamilyVariant.EVEN: ((m,), (m,)),
        FamilyVariant.ODD1: (high, high),
        FamilyVariant.ODD2: (low, low),
        FamilyVariant.ODD3: (high, low),
    }[variant]


def _tail_term(tail: Tuple[int, ...], digit: int, m: int) -> Polynomial:
    """Numerator A_u of q^(k+1) (0^k u tail^inf)_q after clearing the tail denominator."""
    if len(tail) == 1:
        return Polynomial.from_leading_first([digit, m - digit])
    first, second = tail
    # u q^2 + t1 q + t2 - u
    return Polynomial.from_leading_first([digit, first, second - digit])


def _components(family: FamilyId, M: int) -> Tuple[Polynomial, Polynomial, Polynomial, int]:
    """(C, A_u, B_v, s) of the cleared equation."""
    alphabet = family.validate(M)
    m = alphabet.m
    left, right = _tails(family.variant, m)
    if family.variant is FamilyVariant.EVEN:
        constant = Polynomial.from_leading_first([1, -(2 * m + 1), 0])
        shift = 0
    else:
        constant = Polynomial.from_leading_first([1, -(2 * m - 1), -2 * m])
        shift = 1
    return constant, _tail_term(left, family.u, m), _tail_term(right, family.v, m), shift


def family_polynomial(family: FamilyId, M: int) -> Polynomial:
    """x^(max(k,j)+s) times the family value, as an integer polynomial."""
    constant, a, b, s = _components(family, M)
    top = max(family.k, family.j) + s
    return (
        constant.shift_degree(top)
        + a.shift_degree(top - family.k - s)
        + b.shift_degree(top - family.j - s)
    )


def family_value(
    family: FamilyId, M: int, q: Union[FieldElement, AlgebraicReal, int, Fraction]
) -> Union[FieldElement, Fraction]:
    """Exact family value at q (q > 1)."""
    constant, a, b, s = _components(family, M)
    if isinstance(q, AlgebraicReal):
        q = NumberField.of(q).gen()
    if isinstance(q, FieldElement):
        inverse = q.inverse
        return (
            constant(q)
            + a(q) * inverse ** (family.k + s)
            + b(q) * inverse ** (family.j + s)
        )
    q = Fraction(q)
    return constant(q) + a(q) / q ** (family.k + s) + b(q) / q ** (family.j + s)


def _sign_at(poly: Polynomial, base: AlgebraicReal) -> int:
    field = NumberField(base) if base.irreducible_verified else NumberField.of(base)
    return sign_of(field.from_polynomial(poly))


def family_sign_at(family: FamilyId, M: int, base: AlgebraicReal) -> int:
    """Sign of the family value at an algebraic base."""
    return _sign_at(family_polynomial(family, M), base)


def family_has_root(family: FamilyId, M: int) -> bool:
    """True iff the family has a (unique) root in (p1, inf)."""
    return family_sign_at(family, M, p1(M)) < 0


def family_root_criterion(family: FamilyId, M: int) -> bool:
    """Closed-form root criterion in terms of p1."""
    alphabet = family.validate(M)
    m = alphabet.m
    k, j, u, v = family.k, family.j, family.u, family.v

    if family.variant is FamilyVariant.EVEN:
        total = Fraction(u + 1, (m + 1) ** (k + 1)) + Fraction(v + 1, (m + 1) ** (j + 1))
        return total < 1

    base = NumberField(p1(M)).gen()

    def high_term(digit: int, power: int) -> FieldElement:
        return (digit + 1) / (m * base**power)

    def low_term(digit: int, power: int) -> FieldElement:
        return (digit * base + digit + base) / base ** (power + 2)

    if family.variant is FamilyVariant.ODD1:
        total = high_term(u, k) + high_term(v, j)
    elif family.variant is FamilyVariant.ODD2:
        total = low_term(u, k) + low_term(v, j)
    else:
        total = high_term(u, k) + low_term(v, j)
    return sign_of(total - 1) < 0


@cached(cache=_roots_cache, key=lambda family, M: (family, M))
def family_root(family: FamilyId, M: int) -> AlgebraicReal:
    """The unique root of the family in (p1, inf)."""
    low = p1(M)
    if not family_has_root(family, M):
        raise NoRoot(f"family {family} has no root above p1 for M={M}", M=M)
    poly = family_polynomial(family, M)
    roots = [
        r for r in isolate_roots(poly, (low.lo, poly.cauchy_bound())) if r.compare(low) > 0
    ]
    if len(roots) != 1:
        raise NoRoot(f"family {family} has {len(roots)} roots above p1 for M={M}", M=M)
    return minimal_polynomial(roots[0])


def family_root_closed_form(family: FamilyId, M: int) -> AlgebraicReal:
    """Root from the quadratic closed forms available for small k, j."""
    alphabet = family.validate(M)
    m = alphabet.m
    s = 2 * m - family.u - family.v
    key = (family.variant, family.k, family.j)

    if key == (FamilyVariant.EVEN, 0, 0):
        coeffs = [1, -s]
    elif key == (FamilyVariant.EVEN, 1, 0):
        coeffs = [1, -(2 * m - family.v), -(m - family.u)]
    elif key == (FamilyVariant.ODD1, 0, 0):
        coeffs = [1, -(s - 2), -(s - 2)]
    elif key == (FamilyVariant.ODD2, 0, 0):
        coeffs = [1, -(s - 2), -s]
    elif key == (FamilyVariant.ODD2, 1, 0):
        coeffs = [1, -(2 * m - family.v - 1), -(m - family.u)]
    else:
        raise InvalidFamily(f"no closed form for {family}")

    if not family_has_root(family, M):
        raise NoRoot(f"family {family} has no root above p1 for M={M}", M=M)
    poly = Polynomial.from_leading_first(coeffs)
    roots = isolate_roots(poly, (-poly.cauchy_bound(), poly.cauchy_bound()))
    return minimal_polynomial(roots[-1])


def witness_sequences(family: FamilyId, M: int) -> Tuple[DigitSeq, DigitSeq]:
    """The two expansions 1 0^k u L^inf and 0 reflect(0^j v R^inf) equated by the family."""
    alphabet = family.validate(M)
    left_tail, right_tail = _tails(family.variant, alphabet.m)
    left = DigitSeq((1,) + (0,) * family.k + (family.u,), left_tail)
    inner = DigitSeq((0,) * family.j + (family.v,), right_tail)
    right = reflect(inner, alphabet).prepend((0,))
    return left, right
