#!/usr/bin/env python3
"""
Switch region and admissible digits of the expansion dynamics.
"""

from dataclasses import dataclass
from typing import Tuple

from ..algebraic import FieldElement
from ..errors import OutOfInterval
from ..expansions import BaseContext

Overlap = Tuple[int, FieldElement, FieldElement]


@dataclass(frozen=True, eq=False)
class SwitchRegion:
    """Overlaps [d/q, (d-1)/q + M/(q(q-1))] of consecutive digit maps, d = 1..M."""

    overlaps: Tuple[Overlap, ...]

    def contains(self, x: FieldElement) -> bool:
        return any(lo <= x <= hi for _, lo, hi in self.overlaps)

    @property
    def is_empty(self) -> bool:
        return all(lo > hi for _, lo, hi in self.overlaps)


def switch_region(ctx: BaseContext) -> SwitchRegion:
    q, upper = ctx.base, ctx.upper
    overlaps = tuple(
        (d, d / q, (d - 1 + upper) / q) for d in range(1, ctx.M + 1)
    )
    return SwitchRegion(overlaps)


def in_switch_region(x: FieldElement, ctx: BaseContext) -> bool:
    """True iff x lies in some overlap, i.e. admits at least two first digits."""
    return switch_region(ctx).contains(ctx.element(x))


def check_in_interval(x: FieldElement, ctx: BaseContext) -> None:
    if x.sign() < 0 or (ctx.upper - x).sign() < 0:
        raise OutOfInterval(f"{x!r} is outside [0, M/(q-1)] for {ctx!r}")


def allowed_digits(x: FieldElement, ctx: BaseContext) -> Tuple[int, ...]:
    """Digits d with 0 <= q x - d <= M/(q-1), ascending."""
    x = ctx.element(x)
    check_in_interval(x, ctx)
    scaled = ctx.base * x
    upper = ctx.upper
    options = []
    for d in range(ctx.M + 1):
        rest = scaled - d
        if rest.sign() < 0:
            break
        if (upper - rest).sign() >= 0:
            options.append(d)
    return tuple(options)
