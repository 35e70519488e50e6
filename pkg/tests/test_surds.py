"""Exact quadratic surd arithmetic and comparison."""

import math
import random
from fractions import Fraction

import pytest

from markovdim import (DomainError, FieldMixError, QuadraticSurd, as_surd,
                       decimal_bounds, floor_of, sign_of_combination,
                       surd_compare, surd_from_quadratic)


def test_canonical_forms_identify_equal_values():
    assert QuadraticSurd(0, 1, 1, 8) == QuadraticSurd(0, 2, 1, 2)      # sqrt 8 = 2 sqrt 2
    assert QuadraticSurd(0, 2, 4, 12) == QuadraticSurd(0, 1, 1, 3)     # (2 sqrt 12)/4 = sqrt 3
    assert QuadraticSurd(3, 0, 6, 7) == as_surd(Fraction(1, 2))
    assert QuadraticSurd(1, 1, 1, 0) == as_surd(1)


def test_golden_ratio_algebra():
    phi = surd_from_quadratic(1, -1, -1)
    assert phi * phi == phi + 1
    assert phi.reciprocal() == phi - 1
    assert surd_compare(phi, Fraction(1618, 1000)) == 1
    assert surd_compare(phi, Fraction(1619, 1000)) == -1


def test_surd_from_quadratic_root_substitutes_exactly():
    rng = random.Random(20260823)
    found = 0
    while found < 200:
        A = rng.randint(1, 9)
        B = rng.randint(-9, 9)
        C = rng.randint(-9, -1)
        disc = B * B - 4 * A * C
        if math.isqrt(disc) ** 2 == disc:
            continue
        r = surd_from_quadratic(A, B, C)
        assert A * r * r + B * r + C == 0
        assert surd_compare(r, 0) == 1
        found += 1


def test_arithmetic_within_one_field():
    a = QuadraticSurd(1, 2, 3, 5)
    b = QuadraticSurd(-2, 1, 4, 5)
    assert (a + b) - b == a
    assert (a * b) / b == a
    assert a - a == as_surd(0)
    two = a + a
    assert two / 2 == a


def test_mixing_fields_raises():
    r2 = QuadraticSurd(0, 1, 1, 2)
    r3 = QuadraticSurd(0, 1, 1, 3)
    with pytest.raises(FieldMixError):
        r2 + r3
    with pytest.raises(FieldMixError):
        r2 * r3


def test_cross_field_comparison_is_exact():
    r2 = QuadraticSurd(0, 1, 1, 2)
    r3 = QuadraticSurd(0, 1, 1, 3)
    r10 = QuadraticSurd(0, 1, 1, 10)
    assert surd_compare(r2 + 1, r3 + Fraction(414213562373, 10**12)) == 1
    assert sign_of_combination([(Fraction(1), 2), (Fraction(1), 3), (Fraction(-1), 10)]) == -1
    assert sign_of_combination([(Fraction(1), 8), (Fraction(-2), 2)]) == 0
    assert surd_compare(r10, r10) == 0


def test_comparison_separates_tight_rationals():
    # convergents of sqrt 2 alternate around it and get arbitrarily close
    r2 = QuadraticSurd(0, 1, 1, 2)
    p, q = 1, 1
    for _ in range(20):
        p, q = p + 2 * q, p + q
        assert surd_compare(r2, Fraction(p, q)) == (1 if p * p < 2 * q * q else -1)


def test_floor_of_known_and_random():
    assert floor_of(QuadraticSurd(0, 1, 1, 5)) == 2
    assert floor_of(QuadraticSurd(0, 1, 5, 221)) == 2
    assert floor_of(QuadraticSurd(0, 2, 1, 2)) == 2
    assert floor_of(Fraction(-7, 2)) == -4
    rng = random.Random(17)
    for _ in range(200):
        b = rng.randint(1, 50)
        c = rng.randint(1, 20)
        d = rng.choice([2, 3, 5, 6, 7, 10, 11])
        s = QuadraticSurd(rng.randint(-40, 40), b, c, d)
        f = floor_of(s)
        assert surd_compare(s, f) >= 0 and surd_compare(s, f + 1) == -1


def test_decimal_bounds_enclose_and_touch():
    lo, hi = decimal_bounds(QuadraticSurd(0, 1, 1, 5), 12)
    assert (lo, hi) == (2236067977499, 2236067977500)
    assert lo == math.isqrt(5 * 10**24)
    lo, hi = decimal_bounds(Fraction(1, 8), 3)
    assert lo == hi == 125
    rng = random.Random(23)
    for _ in range(100):
        s = QuadraticSurd(rng.randint(0, 9), rng.randint(1, 9), rng.randint(1, 9),
                          rng.choice([2, 3, 5, 7]))
        lo, hi = decimal_bounds(s, 10)
        assert 0 <= hi - lo <= 1
        assert surd_compare(s, Fraction(lo, 10**10)) >= 0
        assert surd_compare(s, Fraction(hi, 10**10)) <= 0


def test_rejects_negative_radicand_and_zero_denominator():
    with pytest.raises(DomainError):
        QuadraticSurd(0, 1, 1, -2)
    with pytest.raises(DomainError):
        QuadraticSurd(1, 1, 0, 2)
