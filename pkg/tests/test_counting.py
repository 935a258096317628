#!/usr/bin/env python3
"""
Tests for the switch region, uniqueness certificates and expansion counting.
"""

import random
from fractions import Fraction

import pytest

from src.algebraic import AlgebraicReal, format_rational
from src.counting import (
    CountKind,
    LeafCertificate,
    UniquenessStatus,
    allowed_digits,
    certify_unique,
    construct_xk,
    count_certificate,
    count_expansions,
    count_prefixes,
    expansions_of_one_M2,
    in_switch_region,
    switch_region,
    xk_sequence,
)
from src.errors import InputError, OutOfInterval
from src.expansions import BaseContext, DigitSeq, evaluate, parse_digits, unique_set_catalog


def brute_prefixes(x, ctx, depth):
    """Admissible words of length ``depth`` by direct interval tests, no memo."""
    if depth == 0:
        return 1
    total = 0
    for d in range(ctx.M + 1):
        rest = ctx.base * x - d
        if rest.sign() >= 0 and (ctx.upper - rest).sign() >= 0:
            total += brute_prefixes(rest, ctx, depth - 1)
    return total


def brute_words(x, ctx, depth):
    """The admissible words themselves, by the same direct walk."""
    if depth == 0:
        return {()}
    words = set()
    for d in range(ctx.M + 1):
        rest = ctx.base * x - d
        if rest.sign() >= 0 and (ctx.upper - rest).sign() >= 0:
            words |= {(d,) + tail for tail in brute_words(rest, ctx, depth - 1)}
    return words


# Switch region
def test_switch_region_silver(silver_ctx):
    region = switch_region(silver_ctx)
    assert [d for d, _, _ in region.overlaps] == [1, 2]
    assert not region.is_empty
    assert in_switch_region(1, silver_ctx)
    assert in_switch_region(Fraction(1, 2), silver_ctx)
    assert not in_switch_region(0, silver_ctx)
    assert not in_switch_region(Fraction(7, 10), silver_ctx)


def test_allowed_digits(silver_ctx):
    assert allowed_digits(silver_ctx.element(Fraction(7, 10)), silver_ctx) == (1,)
    assert allowed_digits(silver_ctx.element(1), silver_ctx) == (1, 2)
    assert allowed_digits(silver_ctx.element(0), silver_ctx) == (0,)
    assert allowed_digits(silver_ctx.upper, silver_ctx) == (2,)
    with pytest.raises(OutOfInterval):
        allowed_digits(silver_ctx.element(2), silver_ctx)
    with pytest.raises(OutOfInterval):
        allowed_digits(silver_ctx.element(-1), silver_ctx)


@pytest.mark.parametrize("fixture", ["silver_ctx", "m2_mid_ctx", "m3_mid_ctx", "m4_q2_ctx"])
def test_covering_without_triple_overlaps(fixture, request):
    ctx = request.getfixturevalue(fixture)
    rng = random.Random(7)
    samples = [ctx.upper * Fraction(rng.randint(0, 400), 400) for _ in range(60)]
    # overlap endpoints are the adversarial points
    for _, lo, hi in switch_region(ctx).overlaps:
        samples += [lo, hi]
    for x in samples:
        options = allowed_digits(x, ctx)
        assert 1 <= len(options) <= 2


# Uniqueness certificates
def test_certify_unique(silver_ctx, m2_mid_ctx):
    zero = certify_unique(0, silver_ctx)
    assert zero.status == UniquenessStatus.UNIQUE
    assert zero.expansion == "(0)"

    one = certify_unique(1, silver_ctx)
    assert one.status == UniquenessStatus.NOT_UNIQUE
    assert one.depth == 0
    assert not one.is_unique

    x = evaluate(parse_digits("0(1)"), m2_mid_ctx)
    result = certify_unique(x, m2_mid_ctx)
    assert result.is_unique
    assert result.sequence == parse_digits("0(1)")


def test_catalog_sequences_are_certified_unique(m2_mid_ctx, m3_mid_ctx):
    for ctx in (m2_mid_ctx, m3_mid_ctx):
        for seq in unique_set_catalog(ctx, 2):
            assert certify_unique(evaluate(seq, ctx), ctx).status == UniquenessStatus.UNIQUE, seq


# Counting
@pytest.mark.parametrize("k", range(1, 7))
def test_xk_has_exactly_k_expansions(k):
    x, ctx = construct_xk(k)
    result = count_expansions(x, ctx, depth_cap=128)
    assert result.kind == CountKind.EXACTLY
    assert result.count == k
    assert result.summary() == f"Exactly({k})"
    assert xk_sequence(k) in result.expansions
    assert all(evaluate(seq, ctx) == x for seq in result.expansions)


def test_x1_is_unique():
    x, ctx = construct_xk(1)
    assert x * x * 2 == 1
    result = count_expansions(x, ctx)
    assert result.expansions == [DigitSeq.periodic((1,))]
    assert result.branches == []


def test_one_has_infinitely_many_expansions(silver_ctx):
    result = count_expansions(1, silver_ctx, depth_cap=60)
    assert result.kind == CountKind.AT_LEAST
    assert result.count >= 20


def test_expansions_of_one():
    sequences = expansions_of_one_M2(3)
    assert len(sequences) == 9
    assert DigitSeq.finite((2, 0, 2, 1)) in sequences
    with pytest.raises(InputError):
        expansions_of_one_M2(-1)
    with pytest.raises(InputError):
        xk_sequence(0)


def test_counting_below_p1_is_never_exact():
    ctx = BaseContext.create(1, AlgebraicReal.rational(Fraction(3, 2)))
    for x in (Fraction(1, 2), Fraction(1), Fraction(3, 2)):
        result = count_expansions(x, ctx, depth_cap=24, branch_cap=16)
        assert result.kind != CountKind.EXACTLY


def test_depth_cap_gives_undecided_or_at_least():
    x, ctx = construct_xk(3)
    result = count_expansions(x, ctx, depth_cap=2)
    assert result.kind != CountKind.EXACTLY
    assert any(leaf.certificate == LeafCertificate.TRUNCATED for leaf in result.leaves)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_reflection_symmetry(k):
    x, ctx = construct_xk(k)
    direct = count_expansions(x, ctx)
    mirrored = count_expansions(ctx.upper - x, ctx)
    assert (mirrored.kind, mirrored.count) == (direct.kind, direct.count)


@pytest.mark.parametrize("k", [2, 4])
def test_prefixes_of_finite_trees(k):
    x, ctx = construct_xk(k)
    result = count_expansions(x, ctx)
    depth = 12
    words = {seq.prefix(depth) for seq in result.expansions}
    assert count_prefixes(x, ctx, depth) == len(words)


@pytest.mark.parametrize("fixture", ["silver_ctx", "m2_mid_ctx", "m3_mid_ctx", "golden_ctx"])
def test_prefix_counts_match_brute_force(fixture, request):
    ctx = request.getfixturevalue(fixture)
    rng = random.Random(11)
    for _ in range(5):
        x = ctx.upper * Fraction(rng.randint(0, 97), 97)
        assert count_prefixes(x, ctx, 8) == brute_prefixes(x, ctx, 8)


def test_count_certificate():
    x, ctx = construct_xk(2)
    result = count_expansions(x, ctx)
    certificate = count_certificate(result, x, ctx, label="100(1)")
    assert certificate["input"] == "100(1)"
    assert certificate["base"] == {
        "poly": "1,-2,-1",
        "interval": [format_rational(ctx.q.lo), format_rational(ctx.q.hi)],
    }
    assert certificate["result"] == {"kind": "Exactly", "count": 2, "depth": result.depth_used}
    assert len(certificate["branches"]) == 1
    assert all(leaf["certificate"] == "unique-cycle" for leaf in certificate["leaves"])
    assert all("tail" in leaf for leaf in certificate["leaves"])


PRESETS = ["golden_ctx", "m1_q2_ctx", "silver_ctx", "m2_mid_ctx", "m2_p2_ctx", "m3_mid_ctx", "m3_p1_ctx", "m4_q2_ctx"]


def test_tree_prefixes_match_brute_force_on_random_rationals(request):
    contexts = [request.getfixturevalue(name) for name in PRESETS]
    rng = random.Random(2024)
    depth = 12
    for _ in range(200):
        ctx = rng.choice(contexts)
        x = Fraction(rng.randint(0, 400), 200)
        while (ctx.upper - ctx.element(x)).sign() < 0:
            x /= 2
        words = brute_words(ctx.element(x), ctx, depth)
        assert count_prefixes(x, ctx, depth) == len(words)
        result = count_expansions(x, ctx)
        if result.kind == CountKind.EXACTLY:
            assert {seq.prefix(depth) for seq in result.expansions} == words
