#!/usr/bin/env python3
"""
Alphabets and eventually periodic digit sequences.
"""

from dataclasses import dataclass
from enum import IntEnum
from math import lcm
from typing import List, Optional, Sequence, Tuple

from ..errors import DigitOutOfRange, InputError


class Order(IntEnum):
    """Result of a lexicographic comparison."""

    LT = -1
    EQ = 0
    GT = 1


@dataclass(frozen=True)
class Alphabet:
    """Digits {0, ..., M}; m = ceil(M / 2)."""

    M: int

    def __post_init__(self):
        if self.M < 1:
            raise InputError(f"largest digit M must be positive, got {self.M}")

    @property
    def m(self) -> int:
        return (self.M + 1) // 2

    @property
    def is_even(self) -> bool:
        return self.M % 2 == 0

    @property
    def digits(self) -> range:
        return range(self.M + 1)

    def check(self, seq: "DigitSeq") -> None:
        """Raise DigitOutOfRange unless every digit of ``seq`` is at most M."""
        largest = seq.max_digit
        if largest > self.M:
            raise DigitOutOfRange(
                f"digit {largest} exceeds M={self.M} in {format_digits(seq, self.M)}",
                M=self.M,
            )


def _primitive_root(word: Tuple[int, ...]) -> Tuple[int, ...]:
    n = len(word)
    for d in range(1, n):
        if n % d == 0 and word[:d] * (n // d) == word:
            return word[:d]
    return word


@dataclass(frozen=True)
class DigitSeq:
    """Eventually periodic sequence preperiod (period)^inf in canonical form.

    The period is primitive and the preperiod does not end with the period's
    last digit; finite sequences carry the period (0,).
    """

    preperiod: Tuple[int, ...]
    period: Tuple[int, ...] = (0,)

    def __post_init__(self):
        pre = tuple(int(d) for d in self.preperiod)
        per = tuple(int(d) for d in self.period) or (0,)
        if any(d < 0 for d in pre + per):
            raise DigitOutOfRange("digits must be non-negative")
        per = _primitive_root(per)
        while pre and pre[-1] == per[-1]:
            per = (pre[-1],) + per[:-1]
            pre = pre[:-1]
        object.__setattr__(self, "preperiod", pre)
        object.__setattr__(self, "period", per)

    @classmethod
    def periodic(cls, word: Sequence[int]) -> "DigitSeq":
        return cls((), tuple(word))

    @classmethod
    def finite(cls, word: Sequence[int]) -> "DigitSeq":
        return cls(tuple(word), (0,))

    @property
    def is_finite(self) -> bool:
        """True when the sequence ends in 0^inf."""
        return self.period == (0,)

    @property
    def max_digit(self) -> int:
        return max(self.preperiod + self.period)

    def __getitem__(self, index: int) -> int:
        """Digit at 0-based position ``index``."""
        if index < len(self.preperiod):
            return self.preperiod[index]
        return self.period[(index - len(self.preperiod)) % len(self.period)]

    def prefix(self, n: int) -> Tuple[int, ...]:
        return tuple(self[i] for i in range(n))

    def shift(self, n: int = 1) -> "DigitSeq":
        """Tail d_{n+1} d_{n+2} ..."""
        if n <= len(self.preperiod):
            return DigitSeq(self.preperiod[n:], self.period)
        offset = (n - len(self.preperiod)) % len(self.period)
        return DigitSeq((), self.period[offset:] + self.period[:offset])

    @property
    def tail_count(self) -> int:
        """Number of positions after which every tail has already occurred."""
        return len(self.preperiod) + len(self.period)

    def prepend(self, word: Sequence[int]) -> "DigitSeq":
        return DigitSeq(tuple(word) + self.preperiod, self.period)

    def __str__(self) -> str:
        return format_digits(self)


def reflect(seq: DigitSeq, alphabet: Alphabet) -> DigitSeq:
    """Digitwise M - d."""
    alphabet.check(seq)
    M = alphabet.M
    return DigitSeq(tuple(M - d for d in seq.preperiod), tuple(M - d for d in seq.period))


def lex_compare(a: DigitSeq, b: DigitSeq) -> Order:
    """Lexicographic order of two infinite sequences."""
    if a == b:
        return Order.EQ
    # Beyond this bound both sequences sit in aligned periodic parts
    bound = len(a.preperiod) + len(b.preperiod) + lcm(len(a.period), len(b.period))
    for i in range(bound):
        x, y = a[i], b[i]
        if x != y:
            return Order.LT if x < y else Order.GT
    return Order.EQ


def parse_digits(text: str, M: Optional[int] = None) -> DigitSeq:
    """Parse ``1(0)``, ``(20)``, ``100(21)`` or comma form ``10,3,(11,0)``.

    A sequence without parentheses is finite (ends in 0^inf).
    """
    raw = text.strip()
    if not raw:
        raise InputError("empty digit sequence")
    comma_form = "," in raw or (M is not None and M >= 10)

    if "(" in raw:
        open_at = raw.index("(")
        if not raw.endswith(")") or raw.count("(") != 1 or raw.count(")") != 1:
            raise InputError(f"invalid digit sequence {text!r}: period must close the sequence")
        pre_text, per_text = raw[:open_at], raw[open_at + 1 : -1]
        if not per_text.strip(" ,"):
            raise InputError(f"invalid digit sequence {text!r}: empty period")
    else:
        pre_text, per_text = raw, ""

    pre = _parse_word(pre_text, comma_form, text)
    per = _parse_word(per_text, comma_form, text)
    seq = DigitSeq(tuple(pre), tuple(per) or (0,))
    if M is not None:
        Alphabet(M).check(seq)
    return seq


def _parse_word(text: str, comma_form: bool, original: str) -> List[int]:
    if comma_form:
        tokens = [token.strip() for token in text.split(",") if token.strip()]
    else:
        tokens = [ch for ch in text if not ch.isspace()]
    try:
        return [int(token) for token in tokens]
    except ValueError as e:
        raise InputError(f"invalid digit sequence {original!r}") from e


def format_digits(seq: DigitSeq, M: Optional[int] = None) -> str:
    """Inverse of ``parse_digits``; comma form when any digit needs two characters."""
    comma_form = (M is not None and M >= 10) or seq.max_digit >= 10
    if comma_form:
        period = "(" + ",".join(str(d) for d in seq.period) + ")"
        if not seq.preperiod:
            return period
        return ",".join(str(d) for d in seq.preperiod) + "," + period
    return "".join(str(d) for d in seq.preperiod) + "(" + "".join(str(d) for d in seq.period) + ")"


def format_word(word: Sequence[int], M: Optional[int] = None) -> str:
    """A finite digit word in the same grammar, without a period."""
    if (M is not None and M >= 10) or any(d >= 10 for d in word):
        return ",".join(str(d) for d in word)
    return "".join(str(d) for d in word)
