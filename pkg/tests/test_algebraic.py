#!/usr/bin/env python3
"""
Tests for polynomials, algebraic reals and number fields.
"""

import random
from fractions import Fraction

import pytest

from src.algebraic import (
    AlgebraicReal,
    NumberField,
    Polynomial,
    element_to_decimal,
    format_decimal,
    format_polynomial,
    is_irreducible,
    isolate_roots,
    make_algebraic,
    minimal_polynomial,
    parse_interval,
    parse_polynomial,
    rational_roots,
    refine,
    sign_of,
    to_decimal,
)
from src.errors import (
    DivisionByZero,
    FieldMismatch,
    InputError,
    MultipleRootsInWindow,
    NoRootInWindow,
    ZeroPolynomial,
)


def sqrt2() -> AlgebraicReal:
    return make_algebraic([1, 0, -2], (1, 2))


# Polynomials
def test_polynomial_text_format():
    """Coefficients are read and written leading first."""
    p = parse_polynomial("1,0,-2,-1,-1")
    assert p.degree == 4
    assert p(2) == 16 - 8 - 2 - 1
    assert format_polynomial(p) == "1,0,-2,-1,-1"
    assert format_polynomial(parse_polynomial("1/2, -3")) == "1/2,-3"


def test_polynomial_parse_errors():
    with pytest.raises(InputError):
        parse_polynomial("1,x")
    with pytest.raises(InputError):
        parse_polynomial(" , ")
    with pytest.raises(InputError):
        parse_interval("2:1")
    assert parse_interval("17/10:9/5") == (Fraction(17, 10), Fraction(9, 5))


def test_polynomial_division_and_gcd():
    x = Polynomial.x()
    one = Polynomial.constant(1)
    f = (x - one) * (x * x - 2 * x - one)
    assert f == Polynomial.from_leading_first([1, -3, 1, 1])
    quotient, remainder = f.divmod(x - one)
    assert remainder.is_zero
    assert quotient == Polynomial.from_leading_first([1, -2, -1])
    assert f.gcd(x * x - one) == x - one
    assert ((x - one) ** 2 * (x + one)).square_free() == x * x - one


def test_dense_form_and_primitive():
    p = Polynomial.from_leading_first([Fraction(1, 2), Fraction(-1, 3), 0])
    assert Polynomial.from_dense(p.dense) == p
    assert p.primitive() == Polynomial.from_leading_first([3, -2, 0])
    assert (-p).integer_coefficients() == (3, -2, 0)
    assert p.shift_degree(2).degree == 4
    assert p.monic().leading == 1


def test_sturm_root_counts():
    p = Polynomial.from_leading_first([1, 0, -2])
    assert p.count_roots(Fraction(0), Fraction(2)) == 1
    assert p.count_roots(Fraction(-2), Fraction(2)) == 2
    # half-open: the root 1 of x - 1 is counted in (0, 1] but not in (1, 2]
    q = Polynomial.from_leading_first([1, -1])
    assert q.count_roots(Fraction(0), Fraction(1)) == 1
    assert q.count_roots(Fraction(1), Fraction(2)) == 0
    assert q.count_roots_closed(Fraction(1), Fraction(2)) == 1


def test_evaluate_interval_encloses_values():
    p = Polynomial.from_leading_first([1, -3, 1, 1])
    lo, hi = p.evaluate_interval(Fraction(2), Fraction(3))
    for t in (Fraction(2), Fraction(5, 2), Fraction(3)):
        assert lo <= p(t) <= hi


# Root isolation and construction
def test_isolate_roots_ascending():
    roots = isolate_roots([1, 0, -2], (-2, 2))
    assert len(roots) == 2
    assert roots[0] < 0 < roots[1]
    assert roots[1] == sqrt2()


def test_isolate_roots_collapses_multiplicities():
    roots = isolate_roots([1, -2, 1], (0, 3))
    assert len(roots) == 1
    assert roots[0] == 1


def test_make_algebraic_errors():
    with pytest.raises(ZeroPolynomial):
        make_algebraic([0], (0, 1))
    with pytest.raises(NoRootInWindow):
        make_algebraic([1, 0, -2], (2, 3))
    with pytest.raises(MultipleRootsInWindow):
        make_algebraic([1, 0, -2], (-2, 2))


def test_rational_endpoint_collapses_interval():
    a = make_algebraic([1, -3, 2], (Fraction(3, 2), 2))
    assert a.is_exact_rational
    assert a == 2


def test_interior_rational_root_collapses_interval():
    a = make_algebraic([1, -2], (1, 3))
    assert a.isolating_interval == (2, 2)
    roots = isolate_roots([2, -3, -2], (-1, 3))
    assert [r.isolating_interval for r in roots] == [(Fraction(-1, 2), Fraction(-1, 2)), (2, 2)]


@pytest.mark.parametrize("coeffs", [
    [1, 0, -2],
    [1, -2, 1, -1],
    [1, 0, -5, 0, 4],
    [2, -3, -11, 6],
    [1, -1, -3, 1, 1, 1],
])
def test_isolating_intervals_are_disjoint_with_one_root(coeffs):
    p = Polynomial.from_leading_first(coeffs)
    bound = p.cauchy_bound()
    roots = isolate_roots(p, (-bound, bound))
    assert len(roots) == p.square_free().count_roots_closed(-bound, bound)
    for a, b in zip(roots, roots[1:]):
        assert a.hi <= b.lo
        assert a < b
    for r in roots:
        sf = Polynomial.from_leading_first(r.defining_poly)
        if r.is_exact_rational:
            assert sf(r.lo) == 0
        else:
            assert sf.count_roots(r.lo, r.hi) == 1


# Comparison
def test_compare_with_rationals():
    r = sqrt2()
    assert Fraction(7, 5) < r < Fraction(3, 2)
    assert r.compare(Fraction(141421, 100000)) == 1
    assert r.compare(Fraction(141422, 100000)) == -1
    assert AlgebraicReal.rational(Fraction(3, 2)) == Fraction(3, 2)


def test_equality_across_defining_polynomials():
    """The same number given by different polynomials compares equal."""
    silver = make_algebraic([1, -2, -1], (2, 3))
    reducible = make_algebraic([1, -3, 1, 1], (2, 3))
    assert silver == reducible
    assert make_algebraic([1, 0, 0, 0, -4], (1, 2)) == sqrt2()
    assert silver != sqrt2()


def test_sorting_algebraic_reals():
    values = [make_algebraic([1, -2, -1], (2, 3)), sqrt2(), AlgebraicReal.rational(2)]
    assert sorted(values) == [values[1], values[2], values[0]]


# Minimal polynomials
def test_minimal_polynomial_of_reducible_definition():
    silver = minimal_polynomial(make_algebraic([1, -3, 1, 1], (2, 3)))
    assert silver.irreducible_verified
    assert silver.defining_poly == (1, -2, -1)


def test_minimal_polynomial_above_degree_four():
    """(x^2 - 2)(x^4 + 1) reduces to x^2 - 2 through the factoring fallback."""
    poly = Polynomial.from_leading_first([1, 0, -2]) * Polynomial.from_leading_first([1, 0, 0, 0, 1])
    a = minimal_polynomial(make_algebraic(poly, (1, 2)))
    assert a.defining_poly == (1, 0, -2)


def test_irreducibility():
    assert is_irreducible(Polynomial.from_leading_first([1, 0, -2]))
    assert is_irreducible(Polynomial.from_leading_first([1, 0, -10, 0, 1]))
    assert is_irreducible(Polynomial.from_leading_first([1, 0, 0, 0, 4])) is False
    assert is_irreducible(Polynomial.from_leading_first([1, -3, 1, 1])) is False
    assert is_irreducible(Polynomial.from_leading_first([1, 0, 0, 0, 0, 0, -2])) is None


def test_rational_roots():
    assert rational_roots(Polynomial.from_leading_first([2, -3, 1])) == [Fraction(1, 2), Fraction(1)]
    assert rational_roots(Polynomial.from_leading_first([1, 0, -2])) == []
    assert rational_roots(Polynomial.from_leading_first([1, -1, 0])) == [Fraction(0), Fraction(1)]


# Decimal output
def test_refine_width():
    lo, hi = refine(sqrt2(), 12)
    assert hi - lo < Fraction(1, 10**12)
    assert lo * lo <= 2 <= hi * hi


def test_to_decimal():
    assert to_decimal(sqrt2(), 10) == "1.4142135624"
    assert to_decimal(make_algebraic([1, -3, -1], (3, 4)), 10) == "3.3027756377"
    assert to_decimal(AlgebraicReal.rational(Fraction(1, 3)), 4) == "0.3333"


def test_format_decimal_rounding():
    assert format_decimal(Fraction(1, 8), 2) == "0.13"
    assert format_decimal(Fraction(-1, 8), 2) == "-0.13"
    assert format_decimal(Fraction(5), 0) == "5"
    assert format_decimal(Fraction(1, 200), 1) == "0.0"


# Number fields
def test_field_arithmetic_silver_ratio():
    field = NumberField(minimal_polynomial(make_algebraic([1, -2, -1], (2, 3))))
    q = field.gen()
    assert q * q == 2 * q + 1
    assert q.inverse == q - 2
    assert (q - 1) ** 2 == 2
    assert q ** -2 * q ** 2 == 1
    assert (1 / q).coeffs == (Fraction(-2), Fraction(1))


def test_field_signs_and_ordering():
    field = NumberField(minimal_polynomial(sqrt2()))
    r = field.gen()
    assert sign_of(r - Fraction(141421, 100000)) == 1
    assert sign_of(Fraction(141422, 100000) - r) == 1
    assert sign_of(r * r - 2) == 0
    assert 1 < r < 2
    assert element_to_decimal(r * 3, 6) == "4.242641"
    assert element_to_decimal(field.from_rational(Fraction(1, 4)), 3) == "0.250"


def test_field_errors():
    field = NumberField(minimal_polynomial(sqrt2()))
    with pytest.raises(DivisionByZero):
        field.zero().inverse
    with pytest.raises(ZeroDivisionError):
        field.one() / field.zero()
    with pytest.raises(FieldMismatch):
        NumberField(make_algebraic([1, -3, 1, 1], (2, 3)))
    other = NumberField(minimal_polynomial(make_algebraic([1, -2, -1], (2, 3))))
    with pytest.raises(FieldMismatch):
        field.gen() + other.gen()


@pytest.mark.parametrize("coeffs, window", [([1, 0, -2], (1, 2)), ([1, -2, 1, -1], (1, 2))])
def test_field_axioms_on_random_elements(coeffs, window):
    field = NumberField(minimal_polynomial(make_algebraic(coeffs, window)))
    rng = random.Random(3)

    def element():
        return field.element([Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(field.degree)])

    for _ in range(25):
        a, b, c = element(), element(), element()
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        if not a.is_zero:
            assert a * a.inverse == 1
            assert (b / a) * a == b
