"""
Switch region, admissible digits and certified expansion counting.
"""

from .constructions import construct_xk, expansions_of_one_M2, silver_context, xk_sequence
from .models import (
    BranchEvent,
    CountKind,
    CountResult,
    LeafCertificate,
    LeafEvent,
    UniquenessResult,
    UniquenessStatus,
)
from .search import certify_unique, count_certificate, count_expansions, count_prefixes
from .switch import SwitchRegion, allowed_digits, in_switch_region, switch_region

__all__ = [
    "BranchEvent",
    "CountKind",
    "CountResult",
    "LeafCertificate",
    "LeafEvent",
    "SwitchRegion",
    "UniquenessResult",
    "UniquenessStatus",
    "allowed_digits",
    "certify_unique",
    "construct_xk",
    "count_certificate",
    "count_expansions",
    "count_prefixes",
    "expansions_of_one_M2",
    "in_switch_region",
    "silver_context",
    "switch_region",
    "xk_sequence",
]
