#!/usr/bin/env python3
"""
Pydantic models for command output.
"""

from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from ..algebraic import AlgebraicReal, format_rational, to_decimal
from ..bases import B2Witness, FamilyId
from ..expansions import format_digits


class OutputFormat(str, Enum):
    """Output formats."""
    JSON = "json"
    TEXT = "text"


class AlgebraicOut(BaseModel):
    """Exact algebraic number with its decimal approximation."""
    poly: str
    interval: List[str]
    decimal: str

    @classmethod
    def of(cls, a: AlgebraicReal, digits: int) -> "AlgebraicOut":
        return cls(
            poly=",".join(str(c) for c in a.defining_poly),
            interval=[format_rational(a.lo), format_rational(a.hi)],
            decimal=to_decimal(a, digits),
        )


class FamilyOut(BaseModel):
    """Family selector."""
    variant: str
    k: int
    j: int
    u: int
    v: int

    @classmethod
    def of(cls, family: FamilyId) -> "FamilyOut":
        return cls(variant=family.variant.value, k=family.k, j=family.j, u=family.u, v=family.v)


class WitnessOut(BaseModel):
    """A base of B2(M) with its two expansions."""
    base: AlgebraicOut
    family: FamilyOut
    left: str
    right: str
    aliases: List[FamilyOut] = Field(default_factory=list)

    @classmethod
    def of(cls, witness: B2Witness, M: int, digits: int) -> "WitnessOut":
        return cls(
            base=AlgebraicOut.of(witness.base, digits),
            family=FamilyOut.of(witness.family),
            left=format_digits(witness.left_seq, M),
            right=format_digits(witness.right_seq, M),
            aliases=[FamilyOut.of(alias) for alias in witness.aliases],
        )


class AlphaOut(BaseModel):
    """Quasi-greedy expansion of 1, or the prefix reached before the horizon."""
    M: int
    base: AlgebraicOut
    decided: bool
    alpha: Optional[str] = None
    admissible: Optional[bool] = None
    prefix: Optional[str] = None


class UniqueOut(BaseModel):
    """Uniqueness of a digit sequence as an expansion."""
    M: int
    base: AlgebraicOut
    seq: str
    decided: bool
    unique: Optional[bool] = None
    in_catalog: Optional[bool] = None
    alpha_prefix: Optional[str] = None


class CatalogOut(BaseModel):
    """Unique expansions of the window catalog."""
    M: int
    base: AlgebraicOut
    max_preperiod: int
    sequences: List[str]


class FamilyReport(BaseModel):
    """A family with its polynomial, root criterion and optional root or value."""
    M: int
    family: FamilyOut
    polynomial: str
    left: str
    right: str
    has_root: bool
    criterion: bool
    root: Optional[AlgebraicOut] = None
    value_at: Optional[Dict[str, Any]] = None


class XkOut(BaseModel):
    """A point with exactly k expansions for M = 2."""
    k: int
    sequence: str
    x: List[str]
    decimal: str
    certificate: Dict[str, Any]


class CheckOut(BaseModel):
    """One named check of a verification suite."""
    name: str
    passed: bool
    detail: Optional[str] = None


class SuiteReport(BaseModel):
    """Result of a verification suite."""
    suite: str
    passed: bool
    checks: List[CheckOut] = Field(default_factory=list)

    def add(self, name: str, passed: bool, detail: Optional[str] = None) -> None:
        self.checks.append(CheckOut(name=name, passed=passed, detail=detail))
        self.passed = self.passed and passed


class ErrorOut(BaseModel):
    """Error payload."""
    error: Dict[str, Any]
