#!/usr/bin/env python3
"""
Base contexts and exact evaluation of digit sequences.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from ..algebraic import AlgebraicReal, FieldElement, NumberField, minimal_polynomial
from ..errors import BaseOutOfWindow
from ..utils.logger import get_logger
from .digits import Alphabet, DigitSeq

logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class BaseContext:
    """Alphabet {0..M}, base q in (1, M+1] and the field Q(q)."""

    alphabet: Alphabet
    q: AlgebraicReal
    field: NumberField

    @classmethod
    def create(cls, M: int, q: AlgebraicReal) -> "BaseContext":
        alphabet = Alphabet(M)
        if q.compare(1) <= 0 or q.compare(M + 1) > 0:
            raise BaseOutOfWindow(f"base {q!r} is not in (1, {M + 1}]", M=M)
        field = NumberField(minimal_polynomial(q))
        logger.debug(f"base context M={M} q={field.generator.defining_poly}")
        return cls(alphabet, field.generator, field)

    @property
    def M(self) -> int:
        return self.alphabet.M

    @property
    def m(self) -> int:
        return self.alphabet.m

    @cached_property
    def base(self) -> FieldElement:
        """q as a field element."""
        return self.field.gen()

    @cached_property
    def upper(self) -> FieldElement:
        """Right end M/(q-1) of the interval I_q."""
        return self.M / (self.base - 1)

    def element(self, value) -> FieldElement:
        """Coerce an int, Fraction or FieldElement of this field."""
        if isinstance(value, FieldElement):
            return value + self.field.zero()
        return self.field.from_rational(value)

    def word_value(self, word: Sequence[int]) -> FieldElement:
        """Sum of w_i q^(n-i): the word read as an integer in base q."""
        acc = self.field.zero()
        for d in word:
            acc = acc * self.base + d
        return acc

    def __repr__(self) -> str:
        return f"BaseContext(M={self.M}, q={self.q!r})"


def evaluate(seq: DigitSeq, ctx: BaseContext) -> FieldElement:
    """Exact value of sum d_i q^(-i)."""
    ctx.alphabet.check(seq)
    q = ctx.base
    head = ctx.word_value(seq.preperiod)
    if seq.is_finite:
        total = head
    else:
        tail = ctx.word_value(seq.period) / (q ** len(seq.period) - 1)
        total = head + tail
    return total / q ** len(seq.preperiod)
