#!/usr/bin/env python3
"""
Pydantic models for counting results and their certificates.
"""

from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field

from ..expansions import DigitSeq


class CountKind(str, Enum):
    """Outcome of expansion counting."""
    EXACTLY = "Exactly"
    AT_LEAST = "AtLeast"
    UNDECIDED = "Undecided"


class LeafCertificate(str, Enum):
    """How a ray of the expansion tree was closed."""
    UNIQUE_CYCLE = "unique-cycle"
    TRUNCATED = "truncated"


class UniquenessStatus(str, Enum):
    UNIQUE = "Unique"
    NOT_UNIQUE = "NotUnique"
    UNKNOWN = "Unknown"


class BranchEvent(BaseModel):
    """A point of the orbit with more than one admissible digit."""
    prefix: str
    digit_options: List[int]


class LeafEvent(BaseModel):
    """A closed ray: its digits so far and, for cycles, the full expansion."""
    prefix: str
    tail: Optional[str] = None
    certificate: LeafCertificate


class UniquenessResult(BaseModel):
    """Outcome of following a single orbit."""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    status: UniquenessStatus
    depth: int
    expansion: Optional[str] = None
    sequence: Optional[DigitSeq] = Field(default=None, exclude=True)

    @property
    def is_unique(self) -> bool:
        return self.status == UniquenessStatus.UNIQUE


class CountResult(BaseModel):
    """Number of q-expansions found, with the evidence."""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    kind: CountKind
    count: int
    depth_used: int
    branches: List[BranchEvent] = Field(default_factory=list)
    leaves: List[LeafEvent] = Field(default_factory=list)
    expansions: List[DigitSeq] = Field(default_factory=list, exclude=True)

    @property
    def is_exact(self) -> bool:
        return self.kind == CountKind.EXACTLY

    def summary(self) -> str:
        if self.kind == CountKind.UNDECIDED:
            return f"Undecided(depth={self.depth_used})"
        return f"{self.kind.value}({self.count})"
