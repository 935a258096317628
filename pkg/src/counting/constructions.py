#!/usr/bin/env python3
"""
Points with a prescribed number of expansions for M = 2, q = 1 + sqrt(2).
"""

from typing import List, Tuple

from ..algebraic import FieldElement
from ..bases import q2
from ..errors import IdentityViolation, InputError
from ..expansions import BaseContext, DigitSeq, evaluate

SILVER_M = 2


def silver_context() -> BaseContext:
    """M = 2 with q = q2(2) = 1 + sqrt(2)."""
    return BaseContext.create(SILVER_M, q2(SILVER_M))


def xk_sequence(k: int) -> DigitSeq:
    """1 (00)^(k-1) 1^inf."""
    if k < 1:
        raise InputError(f"k must be positive, got {k}")
    return DigitSeq((1,) + (0, 0) * (k - 1), (1,))


def construct_xk(k: int) -> Tuple[FieldElement, BaseContext]:
    """x_k, which has exactly k expansions in base 1 + sqrt(2)."""
    ctx = silver_context()
    return evaluate(xk_sequence(k), ctx), ctx


def expansions_of_one_M2(j_max: int) -> List[DigitSeq]:
    """(20)^inf, (20)^j 21 0^inf and (20)^j 1 2^inf for j <= j_max; each is checked to equal 1."""
    if j_max < 0:
        raise InputError(f"j_max must be non-negative, got {j_max}")
    ctx = silver_context()
    sequences = [DigitSeq.periodic((2, 0))]
    for j in range(j_max + 1):
        sequences.append(DigitSeq.finite((2, 0) * j + (2, 1)))
        sequences.append(DigitSeq((2, 0) * j + (1,), (2,)))

    for seq in sequences:
        if evaluate(seq, ctx) != 1:
            raise IdentityViolation(f"{seq} does not evaluate to 1 in base 1 + sqrt(2)")
    return sequences
