#!/usr/bin/env python3
"""
Verification suites reproducing the published constants and theorems.
"""

from fractions import Fraction
from itertools import product
from typing import Callable, Dict, Iterator, List

from ..algebraic import AlgebraicReal, Polynomial, make_algebraic, refine, to_decimal
from ..bases import (
    FamilyId,
    FamilyVariant,
    enumerate_B2_window,
    family_has_root,
    family_root,
    family_value,
    iter_families,
    known_bases_M1,
    midpoint_base,
    p1,
    p2,
    q2,
)
from ..counting import CountKind, construct_xk, count_expansions, expansions_of_one_M2, silver_context
from ..errors import MultibaseError
from ..expansions import (
    Alphabet,
    BaseContext,
    DigitSeq,
    evaluate,
    in_unique_catalog,
    is_unique_expansion,
    quasi_greedy_alpha,
)
from ..utils.logger import get_logger
from .models import SuiteReport

logger = get_logger(__name__)

Q2_TABLE: Dict[int, str] = {
    1: "1.71064",
    2: "2.41421",
    3: "2.75965",
    4: "3.30278",
    5: "3.80320",
    6: "4.23607",
    7: "4.83469",
}

TOLERANCE = Fraction(1, 10**5)


def close_to(a: AlgebraicReal, printed: str, tolerance: Fraction = TOLERANCE) -> bool:
    """True iff a is within ``tolerance`` of the printed decimal."""
    lo, hi = refine(a, 8)
    target = Fraction(printed)
    return target - tolerance < lo and hi < target + tolerance


def table1() -> SuiteReport:
    report = SuiteReport(suite="table1", passed=True)
    for M, printed in Q2_TABLE.items():
        value = q2(M)
        report.add(f"q2({M}) ~ {printed}", close_to(value, printed), to_decimal(value, 6))

    closed_forms = {
        2: ([1, -2, -1], (2, 3), "1+sqrt(2)"),
        4: ([1, -3, -1], (3, 4), "(3+sqrt(13))/2"),
        6: ([1, -4, -1], (4, 5), "2+sqrt(5)"),
    }
    for M, (coeffs, window, label) in closed_forms.items():
        report.add(f"q2({M}) = {label}", q2(M) == make_algebraic(coeffs, window))

    for m in range(1, 9):
        M = 2 * m
        report.add(
            f"q2({M}) = root of even(1,0,{m - 1},{m - 1})",
            q2(M) == family_root(FamilyId(FamilyVariant.EVEN, 1, 0, m - 1, m - 1), M),
        )
    for m in range(1, 9):
        M = 2 * m - 1
        ctx = BaseContext.create(M, q2(M))
        quartic = Polynomial.from_leading_first([1, -(m - 1), -2 * m, -m, -1])
        report.add(f"q2({M}) solves the quartic", quartic(ctx.base).is_zero)
    return report


def thm13() -> SuiteReport:
    report = SuiteReport(suite="thm13", passed=True)
    for k in range(1, 7):
        x, ctx = construct_xk(k)
        result = count_expansions(x, ctx, depth_cap=128)
        report.add(
            f"x_{k} has exactly {k} expansions",
            result.kind == CountKind.EXACTLY and result.count == k,
            result.summary(),
        )

    ctx = silver_context()
    result = count_expansions(1, ctx, depth_cap=60)
    report.add(
        "1 has infinitely many expansions",
        result.kind == CountKind.AT_LEAST and result.count >= 20,
        result.summary(),
    )
    try:
        sequences = expansions_of_one_M2(8)
        report.add("expansions of 1 evaluate to 1", True, f"{len(sequences)} sequences")
    except MultibaseError as e:
        report.add("expansions of 1 evaluate to 1", False, e.message)
    report.add("alpha(1+sqrt(2)) = (20)^inf", quasi_greedy_alpha(ctx) == DigitSeq.periodic((2, 0)))
    return report


def _rooted(M: int, limit: int) -> List[FamilyId]:
    return [f for f in iter_families(M, limit) if family_has_root(f, M)]


def monotonicity(limit: int = 4, alphabets: tuple = (1, 2, 3, 4), pairs_per_family: int = 50) -> SuiteReport:
    report = SuiteReport(suite="monotonicity", passed=True)
    for M in alphabets:
        start = p1(M).hi
        # pairs_per_family consecutive pairs of rational bases above p1
        step = Fraction(M + 1, pairs_per_family)
        samples = [start + i * step for i in range(1, pairs_per_family + 2)]
        violations = 0
        for family in iter_families(M, limit):
            values = [family_value(family, M, r) for r in samples]
            violations += sum(1 for a, b in zip(values, values[1:]) if not a < b)
        report.add(f"M={M}: family values increase in q", violations == 0, f"{violations} violations")

        rooted = {f: family_root(f, M) for f in _rooted(M, limit)}
        violations = 0
        pairs = 0
        for family, root in rooted.items():
            neighbours = [
                (FamilyId(family.variant, family.k + 1, family.j, family.u, family.v), 1),
                (FamilyId(family.variant, family.k, family.j + 1, family.u, family.v), 1),
                (FamilyId(family.variant, family.k, family.j, family.u + 1, family.v), -1),
                (FamilyId(family.variant, family.k, family.j, family.u, family.v + 1), -1),
            ]
            for other, direction in neighbours:
                if other in rooted:
                    pairs += 1
                    if rooted[other].compare(root) != direction:
                        violations += 1
        report.add(
            f"M={M}: roots increase in k, j and decrease in u, v",
            violations == 0,
            f"{pairs} pairs, {violations} violations",
        )
    return report


def _words(alphabet: Alphabet, max_len: int, min_len: int = 0) -> Iterator[tuple]:
    for length in range(min_len, max_len + 1):
        yield from product(alphabet.digits, repeat=length)


def catalogs(max_preperiod: int = 4, max_period: int = 4, alphabets: tuple = (2, 3, 4)) -> SuiteReport:
    report = SuiteReport(suite="catalogs", passed=True)
    for M in alphabets:
        alphabet = Alphabet(M)
        for label, base in (("midpoint", midpoint_base(M)), ("p2", p2(M))):
            ctx = BaseContext.create(M, base)
            alpha = quasi_greedy_alpha(ctx)
            checked = set()
            mismatches = 0
            for pre, per in product(_words(alphabet, max_preperiod), _words(alphabet, max_period, 1)):
                seq = DigitSeq(pre, per)
                if seq in checked:
                    continue
                checked.add(seq)
                if is_unique_expansion(seq, ctx, alpha) != in_unique_catalog(seq, alphabet):
                    mismatches += 1
            report.add(
                f"M={M} q={label}: uniqueness test matches the catalog",
                mismatches == 0,
                f"{len(checked)} sequences, {mismatches} mismatches",
            )
    return report


def b2_sweep(even_max: int = 8, odd_max: int = 7) -> SuiteReport:
    report = SuiteReport(suite="b2-sweep", passed=True)
    alphabets = list(range(2, even_max + 1, 2)) + list(range(1, odd_max + 1, 2))
    for M in sorted(alphabets):
        try:
            witnesses = enumerate_B2_window(M)
        except MultibaseError as e:
            report.add(f"M={M}: sweep matches the closed-form bases", False, e.message)
            continue
        report.add(f"M={M}: sweep matches the closed-form bases", True, f"{len(witnesses)} bases")
        report.add(f"M={M}: smallest window base is q2", witnesses[0].base == q2(M))
        for witness in witnesses:
            ctx = BaseContext.create(M, witness.base)
            result = count_expansions(evaluate(witness.left_seq, ctx), ctx)
            report.add(
                f"M={M} {witness.family}: exactly two expansions",
                result.kind == CountKind.EXACTLY and result.count == 2,
                result.summary(),
            )
    return report


def known_m1() -> SuiteReport:
    report = SuiteReport(suite="known-m1", passed=True)
    known = known_bases_M1()
    for name, value, printed in (
        ("q2", known.q2, "1.71064"),
        ("qk", known.qk, "1.75488"),
        ("q_aleph0_second", known.q_aleph0_second, "1.64541"),
    ):
        report.add(f"{name} ~ {printed}", close_to(value, printed), to_decimal(value, 6))

    silver = make_algebraic([1, -2, -1], (2, 3))
    for params in ((2, 1, 1, 1), (2, 0, 1, 0), (1, 1, 1, 0), (1, 1, 0, 1), (1, 0, 0, 0)):
        family = FamilyId(FamilyVariant.EVEN, *params)
        report.add(f"even{params} root is 1+sqrt(2)", family_root(family, 2) == silver)
    return report


SUITES: Dict[str, Callable[[], SuiteReport]] = {
    "table1": table1,
    "thm13": thm13,
    "monotonicity": monotonicity,
    "catalogs": catalogs,
    "b2-sweep": b2_sweep,
    "known-m1": known_m1,
}


def run_suites(name: str) -> List[SuiteReport]:
    """Run one suite by name, or every suite for ``all``."""
    names = list(SUITES) if name == "all" else [name]
    reports = []
    for suite in names:
        report = SUITES[suite]()
        logger.info(f"suite {suite}: {'passed' if report.passed else 'FAILED'}")
        reports.append(report)
    return reports
