#!/usr/bin/env python3
"""
Critical bases p1, p2, q2(M) and bases defined by their quasi-greedy expansion.
"""

from dataclasses import dataclass

from cachetools import LRUCache, cached

from ..algebraic import AlgebraicReal, Polynomial, isolate_roots, make_algebraic, minimal_polynomial
from ..config.env import get_settings
from ..errors import InputError, NoRoot
from ..expansions import Alphabet, DigitSeq, is_admissible_alpha
from ..utils.logger import get_logger

logger = get_logger(__name__)
settings = get_settings()

_bases_cache: LRUCache = LRUCache(maxsize=settings.MULTIBASE_CACHE_SIZE)


def _alphabet(M: int) -> Alphabet:
    return Alphabet(M)


@cached(cache=_bases_cache, key=lambda M: ("p1", M))
def p1(M: int) -> AlgebraicReal:
    """Generalized golden ratio: alpha(p1) = m^inf or (m(m-1))^inf."""
    m = _alphabet(M).m
    if M % 2 == 0:
        return AlgebraicReal.rational(m + 1)
    return minimal_polynomial(make_algebraic([1, -m, -m], (m, m + 1)))


@cached(cache=_bases_cache, key=lambda M: ("p2", M))
def p2(M: int) -> AlgebraicReal:
    """alpha(p2) = ((m+1)(m-1))^inf or (mm(m-1)(m-1))^inf."""
    m = _alphabet(M).m
    if M % 2 == 0:
        root = make_algebraic([1, -(m + 1), -m], (m + 1, m + 2))
    else:
        root = make_algebraic([1, -(m + 1), 1, -m], (m, m + 1))
    return minimal_polynomial(root)


@cached(cache=_bases_cache, key=lambda M: ("q2", M))
def q2(M: int) -> AlgebraicReal:
    """Smallest base admitting a point with exactly two expansions."""
    m = _alphabet(M).m
    if M % 2 == 0:
        return minimal_polynomial(make_algebraic([1, -(m + 1), -1], (m + 1, m + 2)))

    low, high = p1(M), p2(M)
    quartic = Polynomial.from_leading_first([1, -(m - 1), -2 * m, -m, -1])
    candidates = [
        r for r in isolate_roots(quartic, (m, m + 1)) if r.compare(low) > 0 and r.compare(high) <= 0
    ]
    if len(candidates) != 1:
        raise NoRoot(f"expected one root of {quartic} in (p1, p2], found {len(candidates)}", M=M)
    return minimal_polynomial(candidates[0])


@dataclass(frozen=True)
class KnownBasesM1:
    """Constants for the alphabet {0, 1}."""

    q2: AlgebraicReal
    qk: AlgebraicReal
    q_aleph0_second: AlgebraicReal


def known_bases_M1() -> KnownBasesM1:
    second = make_algebraic([1, 0, -1, -1, -2, -1, -1], (1, 2))
    return KnownBasesM1(q2=q2(1), qk=p2(1), q_aleph0_second=minimal_polynomial(second))


def alpha_polynomial(seq: DigitSeq) -> Polynomial:
    """Integer polynomial whose root in (1, M+1] has ``seq`` as its quasi-greedy expansion of 1."""
    x = Polynomial.x()
    pre, per = len(seq.preperiod), len(seq.period)
    head = Polynomial.from_leading_first(seq.preperiod) if pre else Polynomial(())
    word = Polynomial.from_leading_first(seq.period)
    cycle = x**per - Polynomial.constant(1)
    # (head + word / (x^P - 1)) / x^L = 1, cleared of denominators
    return head * cycle + word - x**pre * cycle


@cached(cache=_bases_cache, key=lambda seq, M: ("alpha", seq, M))
def base_from_alpha(seq: DigitSeq, M: int) -> AlgebraicReal:
    """The base q in (1, M+1] with alpha(q) = ``seq``."""
    _alphabet(M).check(seq)
    if not is_admissible_alpha(seq):
        raise InputError(f"{seq} is not an admissible quasi-greedy expansion of 1")
    poly = alpha_polynomial(seq)
    roots = [r for r in isolate_roots(poly, (1, M + 1)) if r.compare(1) > 0]
    if len(roots) != 1:
        raise NoRoot(f"expected one base for alpha={seq}, found {len(roots)}", M=M)
    logger.debug(f"base for alpha={seq} is a root of {roots[0].defining_poly}")
    return minimal_polynomial(roots[0])


def midpoint_alpha(M: int) -> DigitSeq:
    """An admissible alpha strictly between alpha(p1) and alpha(p2)."""
    m = _alphabet(M).m
    if M % 2 == 0:
        return DigitSeq.periodic((m + 1, m - 1, m - 1))
    return DigitSeq.periodic((m, m, m - 1, m - 1, m - 1))


def midpoint_base(M: int) -> AlgebraicReal:
    """A base in the open window (p1, p2)."""
    return base_from_alpha(midpoint_alpha(M), M)
