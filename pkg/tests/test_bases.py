#!/usr/bin/env python3
"""
Tests for critical bases, two-expansion families and the B2 window sweep.
"""

from fractions import Fraction

import pytest

from src.algebraic import AlgebraicReal, make_algebraic, to_decimal
from src.bases import (
    FamilyId,
    FamilyVariant,
    base_from_alpha,
    enumerate_B2_window,
    family_has_root,
    family_root,
    family_root_closed_form,
    family_root_criterion,
    family_sign_at,
    family_value,
    iter_families,
    known_bases_M1,
    midpoint_base,
    p1,
    p2,
    q2,
    theorem_B2_window,
    witness_sequences,
    witnesses_by_family,
)
from src.errors import InputError, InvalidFamily, NoRoot
from src.expansions import BaseContext, DigitSeq, evaluate, format_digits

EVEN = FamilyVariant.EVEN
ODD1 = FamilyVariant.ODD1
ODD2 = FamilyVariant.ODD2
ODD3 = FamilyVariant.ODD3

Q2_TABLE = {
    1: "1.71064",
    2: "2.41421",
    3: "2.75965",
    4: "3.30278",
    5: "3.80320",
    6: "4.23607",
    7: "4.83469",
}


def near(value: AlgebraicReal, printed: str) -> bool:
    return abs(Fraction(to_decimal(value, 8)) - Fraction(printed)) < Fraction(1, 10**5)


# Critical bases
def test_p1_values():
    assert p1(2) == 2
    assert p1(4) == 3
    assert p1(1) == make_algebraic([1, -1, -1], (1, 2))
    assert p1(3).defining_poly == (1, -2, -2)


def test_p2_values():
    assert p2(2) == make_algebraic([1, -2, -1], (2, 3))
    assert p2(4) == make_algebraic([1, -3, -2], (3, 4))
    assert near(p2(1), "1.75488")


@pytest.mark.parametrize("M", range(1, 8))
def test_q2_table(M):
    assert near(q2(M), Q2_TABLE[M])
    assert p1(M) < q2(M) <= p2(M)


def test_q2_closed_forms():
    assert q2(2) == make_algebraic([1, -2, -1], (2, 3))
    assert q2(4) == make_algebraic([1, -3, -1], (3, 4))
    assert q2(6) == make_algebraic([1, -4, -1], (4, 5))
    assert to_decimal(q2(4), 10) == "3.3027756377"


def test_known_bases_M1():
    known = known_bases_M1()
    assert near(known.q2, "1.71064")
    assert near(known.qk, "1.75488")
    assert near(known.q_aleph0_second, "1.64541")


def test_base_from_alpha():
    assert base_from_alpha(DigitSeq.periodic((2, 0)), 2) == q2(2)
    assert base_from_alpha(DigitSeq.periodic((1, 0)), 1) == p1(1)
    with pytest.raises(InputError):
        base_from_alpha(DigitSeq.periodic((0, 2)), 2)


@pytest.mark.parametrize("M", [1, 2, 3, 4])
def test_midpoint_base_inside_window(M):
    assert p1(M) < midpoint_base(M) < p2(M)


# Families
def test_family_validation():
    with pytest.raises(InvalidFamily):
        FamilyId(ODD1, 0, 0, 0, 0).validate(2)
    with pytest.raises(InvalidFamily):
        FamilyId(EVEN, 0, 0, 0, 0).validate(3)
    with pytest.raises(InvalidFamily):
        FamilyId(EVEN, 0, 0, 3, 0).validate(4)
    with pytest.raises(InvalidFamily):
        FamilyId(ODD2, 0, 0, 2, 0).validate(3)


def test_witness_sequences_agree_at_root(silver_ctx):
    left, right = witness_sequences(FamilyId(EVEN, 1, 0, 0, 0), 2)
    assert format_digits(left) == "100(1)"
    assert format_digits(right) == "02(1)"
    assert evaluate(left, silver_ctx) == evaluate(right, silver_ctx)


@pytest.mark.parametrize("variant", [EVEN, ODD1, ODD2])
def test_family_mirror_symmetry(variant):
    M = 4 if variant is EVEN else 5
    for family in [FamilyId(variant, 2, 0, 1, 0), FamilyId(variant, 1, 3, 0, 1)]:
        for q in (Fraction(7, 2), Fraction(9, 2)):
            assert family_value(family, M, q) == family_value(family.mirrored(), M, q)


def test_family_value_vanishes_at_root():
    family = FamilyId(EVEN, 1, 0, 1, 1)
    root = family_root(family, 4)
    assert root == q2(4)
    assert family_value(family, 4, root).is_zero


@pytest.mark.parametrize("M", [1, 2, 3, 4])
def test_root_criterion_matches_sign_test(M):
    for family in iter_families(M, 3):
        assert family_root_criterion(family, M) == family_has_root(family, M), family


@pytest.mark.parametrize("m", range(1, 9))
def test_even_q2_is_a_family_root(m):
    assert family_root(FamilyId(EVEN, 1, 0, m - 1, m - 1), 2 * m) == q2(2 * m)


def test_boundary_identities():
    # q_{1,0,0,m-1} = p2 and q_{1,1,m,m} = 2m for M = 4
    assert family_root(FamilyId(EVEN, 1, 0, 0, 1), 4) == p2(4)
    assert family_root(FamilyId(EVEN, 1, 1, 2, 2), 4) == 4


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_boundary_identities_reach_p2(m):
    assert family_root(FamilyId(EVEN, 2, 0, m, m - 1), 2 * m) == p2(2 * m)
    assert family_root(FamilyId(ODD2, 3, 0, 0, m - 1), 2 * m - 1) == p2(2 * m - 1)


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_odd3_shift_repeats_odd2(m):
    M = 2 * m - 1
    for k in range(4):
        odd3 = FamilyId(ODD3, k + 1, 0, m - 1, m - 1)
        odd2 = FamilyId(ODD2, k, 0, 0, m - 1)
        assert witness_sequences(odd3, M) == witness_sequences(odd2, M)
        for q in (Fraction(7, 4), Fraction(5, 2), Fraction(m + 1)):
            assert family_value(odd3, M, q) == family_value(odd2, M, q)
        if family_has_root(odd2, M):
            assert family_root(odd3, M) == family_root(odd2, M)


def test_m1_coincidence():
    silver = make_algebraic([1, -2, -1], (2, 3))
    for params in ((2, 1, 1, 1), (2, 0, 1, 0), (1, 1, 1, 0), (1, 1, 0, 1), (1, 0, 0, 0)):
        assert family_root(FamilyId(EVEN, *params), 2) == silver


def test_no_root():
    family = FamilyId(EVEN, 0, 0, 2, 2)
    assert not family_has_root(family, 4)
    with pytest.raises(NoRoot):
        family_root(family, 4)


def test_closed_forms_match_roots():
    cases = [(EVEN, 0, 0, 4), (EVEN, 1, 0, 4), (EVEN, 1, 0, 6), (ODD1, 0, 0, 5), (ODD2, 0, 0, 5), (ODD2, 1, 0, 5)]
    checked = 0
    for variant, k, j, M in cases:
        largest = (M + 1) // 2 if variant is EVEN else (M + 1) // 2 - 1
        for u in range(largest + 1):
            for v in range(largest + 1):
                family = FamilyId(variant, k, j, u, v)
                if not family_has_root(family, M):
                    continue
                assert family_root_closed_form(family, M) == family_root(family, M), family
                checked += 1
    assert checked > 0
    assert family_root_closed_form(FamilyId(EVEN, 0, 0, 0, 0), 4) == 4
    with pytest.raises(InvalidFamily):
        family_root_closed_form(FamilyId(EVEN, 2, 2, 0, 0), 4)


# B2 window
@pytest.mark.parametrize("M", [2, 3, 4, 5])
def test_smallest_theorem_base_is_q2(M):
    assert theorem_B2_window(M)[0] == q2(M)


@pytest.mark.parametrize("M", [1, 2, 3, 4])
def test_enumerate_b2_window(M):
    witnesses = enumerate_B2_window(M)
    assert [w.base for w in witnesses] == theorem_B2_window(M)
    assert witnesses[0].base == q2(M)
    if M % 2 == 0:
        assert len(witnesses) == M // 2
    for witness in witnesses:
        assert p1(M) < witness.base <= p2(M)
        assert witness.family.variant is not ODD1
        others = {witness_sequences(f, M) for f in (witness.family,) + witness.aliases if f.variant is not ODD1}
        for alias in witness.aliases:
            if alias.variant is ODD1:
                assert witness_sequences(alias, M) in others
        ctx = BaseContext.create(M, witness.base)
        assert evaluate(witness.left_seq, ctx) == evaluate(witness.right_seq, ctx)


def test_enumerate_b2_window_m1_odd1_aliases():
    witnesses = enumerate_B2_window(1)
    assert [w.base for w in witnesses] == [q2(1), p2(1)]
    assert [w.family for w in witnesses] == [FamilyId(ODD2, 2, 0, 0, 0), FamilyId(ODD2, 3, 0, 0, 0)]
    assert witness_sequences(FamilyId(ODD1, 3, 1, 0, 0), 1) == witness_sequences(FamilyId(ODD2, 2, 0, 0, 0), 1)
    assert witness_sequences(FamilyId(ODD1, 4, 1, 0, 0), 1) == witness_sequences(FamilyId(ODD2, 3, 0, 0, 0), 1)
    assert FamilyId(ODD1, 3, 1, 0, 0) in witnesses[0].aliases
    assert FamilyId(ODD1, 1, 3, 0, 0) in witnesses[0].aliases
    assert FamilyId(ODD1, 4, 1, 0, 0) in witnesses[1].aliases


@pytest.mark.parametrize("M", [1, 2, 3, 4])
def test_rooted_families_beyond_sweep_are_negative_at_p2(M):
    sweep_k = 8
    for family in iter_families(M, sweep_k + 1):
        if max(family.k, family.j) <= sweep_k or min(family.k, family.j) > 0:
            continue
        if family_has_root(family, M):
            assert family_sign_at(family, M, p2(M)) < 0, family


@pytest.mark.parametrize("M", [5, 6, 7, 8])
def test_enumerate_b2_window_larger_alphabets(M):
    witnesses = enumerate_B2_window(M)
    assert [w.base for w in witnesses] == theorem_B2_window(M)
    assert witnesses[0].base == q2(M)
    for witness in witnesses:
        assert p1(M) < witness.base <= p2(M)
        assert witness.family.variant is not ODD1


def test_enumerate_b2_representatives_even():
    witnesses = enumerate_B2_window(4)
    assert [w.family for w in witnesses] == [FamilyId(EVEN, 1, 0, 1, 1), FamilyId(EVEN, 1, 0, 0, 1)]
    mapping = witnesses_by_family(witnesses)
    assert mapping[FamilyId(EVEN, 1, 0, 1, 1)] == q2(4)

