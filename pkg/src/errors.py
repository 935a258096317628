#!/usr/bin/env python3
"""
Exception hierarchy with machine-readable codes.
"""

from typing import Any, Dict, Optional, Tuple


class MultibaseError(Exception):
    """Base error for all library failures."""

    code: str = "multibase_error"

    def __init__(self, message: str = "", **details: Any):
        super().__init__(message or self.code)
        self.message = message or self.code
        self.details: Dict[str, Any] = details

    def to_dict(self) -> Dict[str, Any]:
        """Error as a JSON-ready mapping."""
        payload: Dict[str, Any] = {"code": self.code, "message": self.message}
        if self.details:
            payload["details"] = {key: str(value) for key, value in self.details.items()}
        return payload


# Algebraic numbers and fields
class ZeroPolynomial(MultibaseError):
    code = "zero_polynomial"


class NoRootInWindow(MultibaseError):
    code = "no_root_in_window"


class MultipleRootsInWindow(MultibaseError):
    code = "multiple_roots_in_window"


class DivisionByZero(MultibaseError, ZeroDivisionError):
    code = "division_by_zero"


class FieldMismatch(MultibaseError):
    code = "field_mismatch"


# Digit sequences
class DigitOutOfRange(MultibaseError):
    code = "digit_out_of_range"


class HorizonExceeded(MultibaseError):
    """Quasi-greedy orbit did not repeat within the horizon."""

    code = "horizon_exceeded"

    def __init__(self, message: str = "", prefix: Optional[Tuple[int, ...]] = None, **details: Any):
        super().__init__(message, **details)
        self.prefix: Tuple[int, ...] = tuple(prefix or ())


class AlphaUndecided(MultibaseError):
    code = "alpha_undecided"


class BaseOutOfWindow(MultibaseError):
    code = "base_out_of_window"


# Families and bases
class InvalidFamily(MultibaseError):
    code = "invalid_family"


class NoRoot(MultibaseError):
    code = "no_root"


class SweepMismatch(MultibaseError):
    code = "sweep_mismatch"


# Counting
class OutOfInterval(MultibaseError):
    code = "out_of_interval"


class IdentityViolation(MultibaseError):
    """A built-in exact identity did not hold."""

    code = "identity_violation"


# Command line
class InputError(MultibaseError):
    code = "input_error"
