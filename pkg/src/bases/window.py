#!/usr/bin/env python3
"""
Bases in (p1, p2] admitting a point with exactly two expansions.
"""

from dataclasses import dataclass, field
from itertools import product
from typing import Dict, Iterator, List, Optional, Tuple

from ..algebraic import AlgebraicReal, NumberField, sign_of
from ..config.env import get_settings
from ..errors import IdentityViolation, SweepMismatch
from ..expansions import Alphabet, BaseContext, DigitSeq, evaluate
from ..utils.logger import get_logger
from .critical import p1, p2
from .families import (
    FamilyId,
    FamilyVariant,
    family_polynomial,
    family_root,
    witness_sequences,
)

logger = get_logger(__name__)
settings = get_settings()


@dataclass(frozen=True)
class B2Witness:
    """A base with two sequences evaluating to the same point."""

    base: AlgebraicReal = field(compare=False)
    family: FamilyId
    left_seq: DigitSeq
    right_seq: DigitSeq
    aliases: Tuple[FamilyId, ...] = ()

    def check_identity(self, M: int) -> None:
        """Raise IdentityViolation unless both sequences have the same value."""
        ctx = BaseContext.create(M, self.base)
        if evaluate(self.left_seq, ctx) != evaluate(self.right_seq, ctx):
            raise IdentityViolation(
                f"witness sequences of {self.family} differ at its root",
                left=self.left_seq,
                right=self.right_seq,
            )


def _variants(M: int) -> List[FamilyVariant]:
    if M % 2 == 0:
        return [FamilyVariant.EVEN]
    return [FamilyVariant.ODD1, FamilyVariant.ODD2, FamilyVariant.ODD3]


def _digit_range(M: int) -> range:
    alphabet = Alphabet(M)
    return range((alphabet.m if alphabet.is_even else alphabet.m - 1) + 1)


def iter_families(M: int, sweep_k: int) -> Iterator[FamilyId]:
    """All families with k, j <= sweep_k, in sort-key order."""
    digits = _digit_range(M)
    for variant in _variants(M):
        for j, k, u, v in product(range(sweep_k + 1), range(sweep_k + 1), digits, digits):
            yield FamilyId(variant, k, j, u, v)


def _dedupe(roots: List[Tuple[AlgebraicReal, FamilyId]]) -> List[Tuple[AlgebraicReal, List[FamilyId]]]:
    """Group families by exactly equal roots, ascending by base."""
    groups: List[Tuple[AlgebraicReal, List[FamilyId]]] = []
    for root, family in roots:
        for base, members in groups:
            if base == root:
                members.append(family)
                break
        else:
            groups.append((root, [family]))
    groups.sort(key=lambda group: group[0])
    return groups


def theorem_B2_window(M: int) -> List[AlgebraicReal]:
    """The bases of B2(M) in (p1, p2] as printed in closed form, ascending and deduplicated."""
    m = Alphabet(M).m
    families: List[FamilyId] = []
    if M % 2 == 0:
        families = [FamilyId(FamilyVariant.EVEN, 1, 0, u, m - 1) for u in range(m)]
    else:
        for k in (2, 3):
            families += [FamilyId(FamilyVariant.ODD2, k, 0, u, m - 1) for u in range(m)]
            families += [FamilyId(FamilyVariant.ODD3, k, 0, u, m - 1) for u in range(m - 1)]
    return [base for base, _ in _dedupe([(family_root(f, M), f) for f in families])]


def _window_signs(family: FamilyId, M: int, low_field: NumberField, high_field: NumberField) -> Tuple[int, int]:
    poly = family_polynomial(family, M)
    return (
        sign_of(low_field.from_polynomial(poly)),
        sign_of(high_field.from_polynomial(poly)),
    )


def enumerate_B2_window(
    M: int, sweep_k: Optional[int] = None, verify: bool = True
) -> List[B2Witness]:
    """Sweep every family with k, j <= sweep_k and keep roots in (p1, p2].

    With ``verify`` the sweep is checked against ``theorem_B2_window``, odd1
    members must repeat another member's sequences, families at sweep_k + 1
    must stay outside the window, and every witness identity must hold. Any
    failure raises.
    """
    sweep_k = sweep_k or settings.MULTIBASE_SWEEP_K
    low_field, high_field = NumberField(p1(M)), NumberField(p2(M))

    found: List[Tuple[AlgebraicReal, FamilyId]] = []
    examined = 0
    for family in iter_families(M, sweep_k):
        examined += 1
        at_low, at_high = _window_signs(family, M, low_field, high_field)
        # Increasing in q: root in (p1, p2] iff negative at p1 and non-negative at p2
        if at_low < 0 <= at_high:
            found.append((family_root(family, M), family))

    groups = _dedupe(found)
    witnesses: List[B2Witness] = []
    for base, members in groups:
        # odd1 members only ever repeat the sequences of another member
        members.sort(key=lambda f: (f.variant is FamilyVariant.ODD1, f.sort_key))
        representative = members[0]
        left, right = witness_sequences(representative, M)
        witnesses.append(B2Witness(base, representative, left, right, tuple(members[1:])))

    logger.info(
        f"B2 window sweep M={M} sweep_k={sweep_k}: {examined} families, "
        f"{len(found)} roots, {len(witnesses)} bases"
    )

    if verify:
        _verify_sweep(M, sweep_k, witnesses, low_field, high_field)
    return witnesses


def _verify_sweep(
    M: int,
    sweep_k: int,
    witnesses: List[B2Witness],
    low_field: NumberField,
    high_field: NumberField,
) -> None:
    expected = theorem_B2_window(M)
    bases = [w.base for w in witnesses]
    if len(bases) != len(expected) or any(a != b for a, b in zip(bases, expected)):
        raise SweepMismatch(
            f"sweep found {len(bases)} bases, closed form lists {len(expected)}",
            M=M,
            found=[b.defining_poly for b in bases],
            expected=[b.defining_poly for b in expected],
        )

    for witness in witnesses:
        _check_odd1_members(witness, M)
        witness.check_identity(M)

    # Roots grow with k and j; a rooted family beyond the sweep must be negative at p2
    for variant in _variants(M):
        for u, v in product(_digit_range(M), repeat=2):
            for boundary in (
                FamilyId(variant, sweep_k + 1, 0, u, v),
                FamilyId(variant, 0, sweep_k + 1, u, v),
            ):
                at_low, at_high = _window_signs(boundary, M, low_field, high_field)
                if at_low >= 0:
                    continue
                if at_high >= 0:
                    raise SweepMismatch(
                        f"family {boundary} beyond the sweep is not negative at p2", M=M
                    )


def _check_odd1_members(witness: B2Witness, M: int) -> None:
    """Raise unless every odd1 member repeats the sequences of a non-odd1 member."""
    families = (witness.family,) + witness.aliases
    others = {witness_sequences(f, M) for f in families if f.variant is not FamilyVariant.ODD1}
    for family in families:
        if family.variant is not FamilyVariant.ODD1:
            continue
        if witness_sequences(family, M) not in others:
            raise SweepMismatch(f"odd1 family has a root in (p1, p2] for M={M}", family=family)
        logger.debug(f"{family} repeats the sequences of another family for M={M}")


def witnesses_by_family(witnesses: List[B2Witness]) -> Dict[FamilyId, AlgebraicReal]:
    """Every swept family with a window root, mapped to its base."""
    mapping: Dict[FamilyId, AlgebraicReal] = {}
    for witness in witnesses:
        for family in (witness.family,) + witness.aliases:
            mapping[family] = witness.base
    return mapping
