"""
Critical bases and the parametric families behind B2(M).
"""

from .critical import (
    KnownBasesM1,
    alpha_polynomial,
    base_from_alpha,
    known_bases_M1,
    midpoint_alpha,
    midpoint_base,
    p1,
    p2,
    q2,
)
from .families import (
    FamilyId,
    FamilyVariant,
    family_has_root,
    family_polynomial,
    family_root,
    family_root_closed_form,
    family_root_criterion,
    family_sign_at,
    family_value,
    witness_sequences,
)
from .window import (
    B2Witness,
    enumerate_B2_window,
    iter_families,
    theorem_B2_window,
    witnesses_by_family,
)

__all__ = [
    "B2Witness",
    "FamilyId",
    "FamilyVariant",
    "KnownBasesM1",
    "alpha_polynomial",
    "base_from_alpha",
    "enumerate_B2_window",
    "family_has_root",
    "family_polynomial",
    "family_root",
    "family_root_closed_form",
    "family_root_criterion",
    "family_sign_at",
    "family_value",
    "iter_families",
    "known_bases_M1",
    "midpoint_alpha",
    "midpoint_base",
    "p1",
    "p2",
    "q2",
    "theorem_B2_window",
    "witnesses_by_family",
]
