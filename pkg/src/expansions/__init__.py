"""
Digit sequences, base-q evaluation and the lexicographic uniqueness theory.
"""

from .context import BaseContext, evaluate
from .digits import (
    Alphabet,
    DigitSeq,
    Order,
    format_digits,
    format_word,
    lex_compare,
    parse_digits,
    reflect,
)
from .uniqueness import (
    in_unique_catalog,
    is_admissible_alpha,
    is_unique_expansion,
    quasi_greedy_alpha,
    unique_set_catalog,
)

__all__ = [
    "Alphabet",
    "BaseContext",
    "DigitSeq",
    "Order",
    "evaluate",
    "format_digits",
    "format_word",
    "in_unique_catalog",
    "is_admissible_alpha",
    "is_unique_expansion",
    "lex_compare",
    "parse_digits",
    "quasi_greedy_alpha",
    "reflect",
    "unique_set_catalog",
]
