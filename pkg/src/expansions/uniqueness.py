#!/usr/bin/env python3
"""
Quasi-greedy expansion of 1, admissibility and the uniqueness test.
"""

from math import lcm
from typing import Dict, List, Optional

from ..config.env import get_settings
from ..errors import AlphaUndecided, BaseOutOfWindow, HorizonExceeded
from ..utils.logger import get_logger
from .context import BaseContext
from .digits import Alphabet, DigitSeq, Order, lex_compare, reflect

logger = get_logger(__name__)
settings = get_settings()


def quasi_greedy_alpha(ctx: BaseContext, horizon: Optional[int] = None) -> DigitSeq:
    """alpha(q): the lexicographically largest infinite q-expansion of 1.

    Raises HorizonExceeded carrying the computed prefix when the greedy orbit
    neither terminates nor repeats within ``horizon`` steps.
    """
    horizon = horizon or settings.MULTIBASE_ALPHA_HORIZON
    q = ctx.base
    remainder = ctx.field.one()
    seen: Dict = {remainder: 0}
    digits: List[int] = []

    for step in range(1, horizon + 1):
        scaled = q * remainder
        digit = ctx.M
        while (scaled - digit).sign() < 0:
            digit -= 1
        digits.append(digit)
        remainder = scaled - digit

        if remainder.is_zero:
            # Greedy expansion is finite: d_1 ... d_n 0^inf
            word = tuple(digits[:-1]) + (digits[-1] - 1,)
            alpha = DigitSeq.periodic(word)
            logger.debug(f"alpha terminated after {step} steps: {alpha}")
            return alpha

        if remainder in seen:
            start = seen[remainder]
            alpha = DigitSeq(tuple(digits[:start]), tuple(digits[start:]))
            logger.debug(f"alpha orbit repeated after {step} steps: {alpha}")
            return alpha
        seen[remainder] = step

    logger.warning(f"alpha undecided within {horizon} steps for {ctx!r}")
    raise HorizonExceeded(
        f"quasi-greedy orbit did not repeat within {horizon} steps",
        prefix=tuple(digits),
        horizon=horizon,
    )


def is_admissible_alpha(seq: DigitSeq) -> bool:
    """True iff every shift of ``seq`` is lexicographically at most ``seq``."""
    if seq.is_finite:
        return False
    return all(lex_compare(seq.shift(n), seq) != Order.GT for n in range(1, seq.tail_count + 1))


def _alpha_or_undecided(ctx: BaseContext, horizon: Optional[int]) -> DigitSeq:
    try:
        return quasi_greedy_alpha(ctx, horizon)
    except HorizonExceeded as e:
        raise AlphaUndecided(
            f"alpha(q) is not eventually periodic within the horizon: {e.message}",
            prefix=e.prefix,
        ) from e


def is_unique_expansion(
    seq: DigitSeq,
    ctx: BaseContext,
    alpha: Optional[DigitSeq] = None,
    horizon: Optional[int] = None,
) -> bool:
    """Lexicographic uniqueness test of an expansion against alpha(q) and its reflection."""
    ctx.alphabet.check(seq)
    alpha = alpha or _alpha_or_undecided(ctx, horizon)
    mirrored = reflect(alpha, ctx.alphabet)
    M = ctx.M

    # Every tail agrees with alpha forever once it agrees on this many digits
    bound = len(seq.preperiod) + len(alpha.preperiod) + lcm(len(seq.period), len(alpha.period))
    digits = seq.prefix(seq.tail_count + bound)
    top, bottom = alpha.prefix(bound), mirrored.prefix(bound)

    for n in range(1, seq.tail_count + 1):
        digit = digits[n - 1]
        tail = digits[n : n + bound]
        if digit < M and not tail < top:
            return False
        if digit > 0 and not tail > bottom:
            return False
    return True


def _catalog_tails(alphabet: Alphabet) -> List[tuple]:
    m = alphabet.m
    if alphabet.is_even:
        return [(m,)]
    return [(m, m - 1), (m - 1, m)]


def _largest_free_digit(alphabet: Alphabet) -> int:
    return alphabet.m if alphabet.is_even else alphabet.m - 1


def in_unique_catalog(seq: DigitSeq, alphabet: Alphabet) -> bool:
    """Shape test for the explicit unique-expansion sets of the window (p1, p2]."""
    return _catalog_shape(seq, alphabet) or _catalog_shape(reflect(seq, alphabet), alphabet)


def _catalog_shape(seq: DigitSeq, alphabet: Alphabet) -> bool:
    if seq == DigitSeq.periodic((0,)):
        return True
    if seq.period not in [DigitSeq.periodic(t).period for t in _catalog_tails(alphabet)]:
        return False
    pre = seq.preperiod
    if not pre:
        return True
    # 0^k u followed by the tail
    return all(d == 0 for d in pre[:-1]) and pre[-1] <= _largest_free_digit(alphabet)


def unique_set_catalog(ctx: BaseContext, max_preperiod: int) -> List[DigitSeq]:
    """Unique expansions 0^k u tail and reflections for k <= max_preperiod, p1 < q <= p2."""
    # Imported here: bases depends on this package
    from ..bases.critical import p1, p2

    M = ctx.M
    if ctx.q.compare(p1(M)) <= 0 or ctx.q.compare(p2(M)) > 0:
        raise BaseOutOfWindow(f"catalog requires p1 < q <= p2, got {ctx.q!r}", M=M)

    alphabet = ctx.alphabet
    found = {DigitSeq.periodic((0,))}
    for tail in _catalog_tails(alphabet):
        for k in range(max_preperiod + 1):
            for u in range(_largest_free_digit(alphabet) + 1):
                found.add(DigitSeq((0,) * k + (u,), tail))

    catalog = found | {reflect(seq, alphabet) for seq in found}
    ordered = sorted(catalog, key=lambda s: (len(s.preperiod), s.preperiod, s.period))
    logger.debug(f"catalog M={M} max_preperiod={max_preperiod}: {len(ordered)} sequences")
    return ordered
