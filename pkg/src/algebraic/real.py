#!/usr/bin/env python3
"""
Exact real algebraic numbers: defining polynomial plus isolating interval.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, total_ordering
from math import isqrt
from typing import Any, List, Optional, Sequence, Tuple, Union

from cachetools import LRUCache, cachedmethod
from sympy.polys.domains import ZZ
from sympy.polys.factortools import dup_factor_list

from ..errors import MultipleRootsInWindow, NoRootInWindow, ZeroPolynomial
from ..utils.logger import get_logger
from .polynomial import Interval, Polynomial

logger = get_logger(__name__)

PolynomialLike = Union[Polynomial, Sequence[Any]]


def _as_polynomial(poly: PolynomialLike) -> Polynomial:
    if isinstance(poly, Polynomial):
        return poly
    return Polynomial.from_leading_first(poly)


@total_ordering
@dataclass(frozen=True, eq=False)
class AlgebraicReal:
    """A real root of an integer polynomial, located by a rational interval.

    The closed interval [lo, hi] holds exactly one root of ``defining_poly``.
    lo == hi only for rational numbers, in which case lo is the number.
    """

    defining_poly: Tuple[int, ...]
    lo: Fraction
    hi: Fraction
    irreducible_verified: bool = False
    _cache: LRUCache = field(
        default_factory=lambda: LRUCache(maxsize=256), init=False, repr=False, compare=False
    )

    def __post_init__(self):
        object.__setattr__(self, "defining_poly", tuple(int(c) for c in self.defining_poly))
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        # Endpoints that are roots collapse the interval
        if self.lo != self.hi:
            if self.poly(self.lo) == 0:
                object.__setattr__(self, "hi", self.lo)
            elif self.poly(self.hi) == 0:
                object.__setattr__(self, "lo", self.hi)

    @cached_property
    def poly(self) -> Polynomial:
        return Polynomial.from_leading_first(self.defining_poly)

    @property
    def degree(self) -> int:
        return len(self.defining_poly) - 1

    @property
    def isolating_interval(self) -> Interval:
        return self.lo, self.hi

    @property
    def is_exact_rational(self) -> bool:
        return self.lo == self.hi

    @classmethod
    def rational(cls, value: Any) -> "AlgebraicReal":
        value = Fraction(value)
        return cls((value.denominator, -value.numerator), value, value, True)

    # Refinement
    def _bisect(self, lo: Fraction, hi: Fraction, width: Fraction) -> Interval:
        poly = self.poly
        sign_lo = poly.sign_at(lo)
        while hi - lo > width:
            mid = (lo + hi) / 2
            s = poly.sign_at(mid)
            if s == 0:
                return mid, mid
            if s == sign_lo:
                lo = mid
            else:
                hi = mid
        return lo, hi

    @cachedmethod(lambda self: self._cache)
    def interval_at(self, level: int) -> Interval:
        """Isolating interval of width at most 2**(-16 * level)."""
        if self.lo == self.hi:
            return self.lo, self.hi
        if level <= 0:
            return self.lo, self.hi
        lo, hi = self.interval_at(level - 1)
        if lo == hi:
            return lo, hi
        return self._bisect(lo, hi, Fraction(1, 2 ** (16 * level)))

    # Ordering
    def compare(self, other: Any) -> int:
        """Exact three-way comparison with another AlgebraicReal or a rational."""
        if not isinstance(other, AlgebraicReal):
            return self._compare_rational(Fraction(other))
        if self is other:
            return 0
        if self.hi < other.lo:
            return -1
        if other.hi < self.lo:
            return 1
        if self._shares_root_with(other):
            return 0
        level = 1
        while True:
            a_lo, a_hi = self.interval_at(level)
            b_lo, b_hi = other.interval_at(level)
            if a_hi < b_lo:
                return -1
            if b_hi < a_lo:
                return 1
            level += 1

    def _shares_root_with(self, other: "AlgebraicReal") -> bool:
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        if lo > hi:
            return False
        common = self.poly.gcd(other.poly)
        if common.degree < 1:
            return False
        return common.count_roots_closed(lo, hi) > 0

    def _compare_rational(self, value: Fraction) -> int:
        if self.lo == self.hi:
            return (self.lo > value) - (self.lo < value)
        if self.lo <= value <= self.hi and self.poly(value) == 0:
            return 0
        level = 0
        while True:
            lo, hi = self.interval_at(level)
            if hi < value:
                return -1
            if lo > value:
                return 1
            if lo == hi:
                return (lo > value) - (lo < value)
            level += 1

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, (AlgebraicReal, int, Fraction)):
            return NotImplemented
        return self.compare(other) == 0

    def __lt__(self, other: Any) -> bool:
        if not isinstance(other, (AlgebraicReal, int, Fraction)):
            return NotImplemented
        return self.compare(other) < 0

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        poly = ",".join(str(c) for c in self.defining_poly)
        return f"AlgebraicReal(poly={poly}, interval=[{self.lo}, {self.hi}])"


# Construction
def isolate_roots(poly: PolynomialLike, window: Interval) -> List[AlgebraicReal]:
    """All real roots of ``poly`` in the closed window, ascending, multiplicities collapsed."""
    p = _as_polynomial(poly)
    if p.is_zero:
        raise ZeroPolynomial("cannot isolate roots of the zero polynomial")
    lo, hi = Fraction(window[0]), Fraction(window[1])
    sf = p.square_free()
    if sf.degree < 1 or hi < lo:
        return []

    intervals: List[Interval] = []
    if sf(lo) == 0:
        intervals.append((lo, lo))
    _isolate(sf, lo, hi, intervals)

    # Rational roots get degenerate intervals
    exact = [r for r in rational_roots(sf) if lo <= r <= hi]
    intervals = [next(((r, r) for r in exact if a <= r <= b), (a, b)) for a, b in intervals]

    coeffs = sf.integer_coefficients()
    irreducible = bool(is_irreducible(sf))
    roots = [AlgebraicReal(coeffs, a, b, irreducible) for a, b in intervals]
    logger.debug(f"isolated {len(roots)} roots of {coeffs} in [{lo}, {hi}]")
    return roots


def _isolate(p: Polynomial, a: Fraction, b: Fraction, out: List[Interval]) -> None:
    """Bisect the half-open (a, b] until each piece holds one root."""
    n = p.count_roots(a, b)
    if n == 0:
        return
    if n == 1 and p(a) != 0:
        if p(b) == 0:
            out.append((b, b))
        else:
            out.append((a, b))
        return
    mid = (a + b) / 2
    _isolate(p, a, mid, out)
    _isolate(p, mid, b, out)


def make_algebraic(poly: PolynomialLike, window: Interval) -> AlgebraicReal:
    """The unique root of ``poly`` in ``window``."""
    p = _as_polynomial(poly)
    if p.is_zero:
        raise ZeroPolynomial("defining polynomial is zero")
    if p.degree < 1:
        raise NoRootInWindow(f"constant polynomial {p} has no roots", window=window)
    roots = isolate_roots(p, window)
    if not roots:
        raise NoRootInWindow(f"no root of {p} in [{window[0]}, {window[1]}]", window=window)
    if len(roots) > 1:
        raise MultipleRootsInWindow(
            f"{len(roots)} roots of {p} in [{window[0]}, {window[1]}]", window=window
        )
    return roots[0]


def refine(a: AlgebraicReal, digits: int) -> Interval:
    """Interval around ``a`` of width below 10**(-digits)."""
    bound = Fraction(1, 10 ** max(1, digits))
    if a.lo == a.hi:
        return a.lo, a.hi
    level = 0
    while True:
        lo, hi = a.interval_at(level)
        if hi - lo < bound:
            return lo, hi
        level += 1


def format_decimal(value: Fraction, digits: int) -> str:
    """Rational rounded half up to ``digits`` places."""
    scaled = Fraction(value) * 10**digits
    rounded = int(scaled + Fraction(1, 2)) if scaled >= 0 else -int(-scaled + Fraction(1, 2))
    sign = "-" if rounded < 0 else ""
    text = str(abs(rounded)).rjust(digits + 1, "0")
    if digits == 0:
        return f"{sign}{text}"
    return f"{sign}{text[:-digits]}.{text[-digits:]}"


def to_decimal(a: AlgebraicReal, digits: int) -> str:
    """Decimal rendering rounded to ``digits`` places."""
    lo, hi = refine(a, digits + 3)
    return format_decimal((lo + hi) / 2, digits)


# Irreducibility and minimal polynomials
def _divisors(n: int) -> List[int]:
    n = abs(n)
    small = [d for d in range(1, isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def rational_roots(p: Polynomial) -> List[Fraction]:
    """Rational roots by the rational root test."""
    coeffs = p.primitive().integer_coefficients()
    if len(coeffs) < 2:
        return []
    roots = set()
    if coeffs[-1] == 0:
        roots.add(Fraction(0))
        trimmed = list(coeffs)
        while trimmed and trimmed[-1] == 0:
            trimmed.pop()
        coeffs = tuple(trimmed)
        if len(coeffs) < 2:
            return sorted(roots)
    lead, const = coeffs[0], coeffs[-1]
    poly = Polynomial.from_leading_first(coeffs)
    for num in _divisors(const):
        for den in _divisors(lead):
            for candidate in (Fraction(num, den), Fraction(-num, den)):
                if poly(candidate) == 0:
                    roots.add(candidate)
    return sorted(roots)


def _quadratic_factor(p: Polynomial) -> Optional[Polynomial]:
    """Integer quadratic factor of a primitive quartic, if any."""
    coeffs = p.integer_coefficients()
    norm_sq = sum(c * c for c in coeffs)
    root = isqrt(norm_sq)
    norm = root if root * root == norm_sq else root + 1
    # Coefficients of a factor are bounded by binomial(2, i) times the Mahler measure
    b_bound = 2 * norm
    for a in _divisors(coeffs[0]):
        for c_abs in _divisors(coeffs[-1]):
            for c in (c_abs, -c_abs):
                for b in range(-b_bound, b_bound + 1):
                    candidate = Polynomial.from_leading_first((a, b, c))
                    if (p % candidate).is_zero:
                        return candidate
    return None


def is_irreducible(p: Polynomial) -> Optional[bool]:
    """Irreducibility over the integers for degree <= 4; None when not decided."""
    p = p.primitive()
    if p.degree < 1:
        return False
    if p.degree == 1:
        return True
    if p.degree > 4:
        return None
    if rational_roots(p):
        return False
    if p.degree <= 3:
        return True
    return _quadratic_factor(p) is None


def _small_factors(p: Polynomial) -> List[Polynomial]:
    """Irreducible factors of a square-free primitive polynomial of degree <= 4."""
    factors: List[Polynomial] = []
    rest = p.primitive()
    for r in rational_roots(rest):
        linear = Polynomial.from_leading_first((r.denominator, -r.numerator))
        factors.append(linear)
        rest = (rest // linear).primitive()
    if rest.degree == 4:
        quadratic = _quadratic_factor(rest)
        if quadratic is not None:
            factors.append(quadratic.primitive())
            rest = (rest // quadratic).primitive()
    if rest.degree >= 1:
        factors.append(rest)
    return factors


def _sympy_factors(p: Polynomial) -> List[Polynomial]:
    _, factors = dup_factor_list([ZZ(c) for c in p.integer_coefficients()], ZZ)
    return [Polynomial.from_leading_first([int(c) for c in factor]) for factor, _ in factors]


def minimal_polynomial(a: AlgebraicReal) -> AlgebraicReal:
    """``a`` re-expressed over its irreducible defining polynomial."""
    if a.irreducible_verified:
        return a
    p = a.poly.square_free()
    factors = _small_factors(p) if p.degree <= 4 else _sympy_factors(p)
    for factor in factors:
        if factor.count_roots_closed(a.lo, a.hi) > 0:
            result = AlgebraicReal(factor.integer_coefficients(), a.lo, a.hi, True)
            logger.debug(f"minimal polynomial of {a!r} is {result.defining_poly}")
            return result
    raise NoRootInWindow(f"no factor of {a.defining_poly} vanishes in [{a.lo}, {a.hi}]")
