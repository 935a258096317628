"""
Exact real algebraic numbers, polynomials and number fields.
"""

from .field import FieldElement, NumberField, element_to_decimal, sign_of
from .polynomial import (
    Interval,
    Polynomial,
    format_polynomial,
    format_rational,
    parse_interval,
    parse_polynomial,
    parse_rational,
)
from .real import (
    AlgebraicReal,
    format_decimal,
    is_irreducible,
    isolate_roots,
    make_algebraic,
    minimal_polynomial,
    rational_roots,
    refine,
    to_decimal,
)

__all__ = [
    "AlgebraicReal",
    "FieldElement",
    "Interval",
    "NumberField",
    "Polynomial",
    "element_to_decimal",
    "format_decimal",
    "format_polynomial",
    "format_rational",
    "is_irreducible",
    "isolate_roots",
    "make_algebraic",
    "minimal_polynomial",
    "parse_interval",
    "parse_polynomial",
    "parse_rational",
    "rational_roots",
    "refine",
    "sign_of",
    "to_decimal",
]
