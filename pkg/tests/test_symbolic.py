"""Periodic values, position windows and alphabet extremes."""

import random
from fractions import Fraction

import pytest

from markovdim import (DomainError, PeriodicWord, QuadraticSurd, Word,
                       alphabet_sum_bound, digit_cap, evaluate_with_tail,
                       lagrange_value_eventually_periodic, markov_value_periodic,
                       nonessentially_affine_certificate, periodic_value,
                       surd_compare, tail_extremes, transpose, window_bounds)
from markovdim.symbolic import fixed_point_quadratic


def test_periodic_word_reduces_to_primitive_root():
    assert PeriodicWord(Word((1, 2, 1, 2))).period == Word((1, 2))
    assert PeriodicWord(Word((2, 2, 2))).period == Word((2,))
    assert PeriodicWord(Word((1, 2, 2))).period == Word((1, 2, 2))
    with pytest.raises(DomainError):
        PeriodicWord(Word())


def test_periodic_values_known_closed_forms():
    assert periodic_value((1,)) == QuadraticSurd(-1, 1, 2, 5)      # 1/phi
    assert periodic_value((2,)) == QuadraticSurd(-1, 1, 1, 2)      # sqrt 2 - 1
    assert periodic_value((1, 2)) == QuadraticSurd(-1, 1, 1, 3)    # sqrt 3 - 1
    assert periodic_value((2, 1)) == periodic_value((2, 1, 2, 1))


def test_periodic_value_satisfies_its_quadratic():
    rng = random.Random(20260823)
    for _ in range(150):
        w = Word(rng.randint(1, 5) for _ in range(rng.randint(1, 6)))
        v = periodic_value(w)
        A, B, C = fixed_point_quadratic(w)
        assert A * v * v + B * v + C == 0
        assert surd_compare(v, 0) == 1 and surd_compare(v, 1) <= 0


def test_periodic_value_is_the_limit_of_truncations():
    rng = random.Random(8)
    for _ in range(60):
        w = Word(rng.randint(1, 4) for _ in range(rng.randint(1, 4)))
        v = periodic_value(w)
        deep = Word(tuple(w) * 12)
        box_lo = evaluate_with_tail(deep, Fraction(w[0] + 1))
        box_hi = evaluate_with_tail(deep, Fraction(1))
        lo, hi = (box_lo, box_hi) if box_lo < box_hi else (box_hi, box_lo)
        assert surd_compare(v, lo) >= 0 and surd_compare(v, hi) <= 0


def test_markov_values_of_classical_periods():
    assert markov_value_periodic((1,)) == QuadraticSurd(0, 1, 1, 5)
    assert markov_value_periodic((2,)) == QuadraticSurd(0, 2, 1, 2)
    assert markov_value_periodic((1, 2)) == QuadraticSurd(0, 2, 1, 3)
    assert markov_value_periodic((2, 2, 1, 1)) == QuadraticSurd(0, 1, 5, 221)


def test_markov_value_invariant_under_rotation_and_transpose():
    rng = random.Random(45)
    for _ in range(80):
        w = Word(rng.randint(1, 4) for _ in range(rng.randint(1, 5)))
        m = markov_value_periodic(w)
        k = rng.randrange(len(w))
        rot = Word(w[k:] + w[:k])
        assert markov_value_periodic(rot) == m
        assert markov_value_periodic(transpose(w)) == m


def test_markov_value_dominates_position_sums():
    rng = random.Random(64)
    for _ in range(60):
        w = Word(rng.randint(1, 4) for _ in range(rng.randint(1, 5)))
        m = markov_value_periodic(w)
        j = rng.randrange(len(w))
        rot = Word(w[j:] + w[:j])
        val = periodic_value(rot).reciprocal() + periodic_value(transpose(rot))
        assert surd_compare(m, val) >= 0


def test_lagrange_value_is_set_by_the_right_tail():
    want = markov_value_periodic((1, 2))
    got = lagrange_value_eventually_periodic((3, 1, 4), (2, 2), (1, 2))
    assert got == want
    assert lagrange_value_eventually_periodic((), (1,), (2,)) == QuadraticSurd(0, 2, 1, 2)


def test_tail_extremes_are_alternating_fixed_points():
    for T in range(1, 8):
        small, big = tail_extremes(T)
        # M = [T; 1, T, ...] solves M = T + 1/(1 + 1/M); mu = 1 + 1/M
        assert big == T + (1 + big.reciprocal()).reciprocal()
        assert small == 1 + big.reciprocal()
        assert surd_compare(small, 1) == 1 and surd_compare(big, T) >= 0


def test_alphabet_sum_bound_landmarks():
    assert alphabet_sum_bound(1) == QuadraticSurd(0, 1, 1, 5)
    assert alphabet_sum_bound(2) == QuadraticSurd(0, 2, 1, 3)


def test_window_bounds_single_two():
    wb = window_bounds(Word((2,)), 1, 2)
    assert wb.lower == QuadraticSurd(1, 1, 1, 3)
    assert wb.upper == QuadraticSurd(0, 2, 1, 3)


def test_window_brackets_exact_periodic_completions():
    """Any periodic two-sided completion lands inside the certified window."""
    rng = random.Random(20260823)
    for _ in range(120):
        T = rng.randint(1, 4)
        n = rng.randint(1, 6)
        w = Word(rng.randint(1, T) for _ in range(n))
        j = rng.randint(1, n)
        wb = window_bounds(w, j, T)
        # one periodic tail on both sides keeps the completion in a single field
        tail = Word(rng.randint(1, T) for _ in range(rng.randint(1, 3)))
        y = periodic_value(tail).reciprocal()
        alpha = evaluate_with_tail(w[j - 1:], y).reciprocal()
        beta = evaluate_with_tail(transpose(w[: j - 1]), y)
        val = alpha + beta
        assert surd_compare(wb.lower, val) <= 0
        assert surd_compare(wb.upper, val) >= 0


def test_window_position_validation():
    with pytest.raises(DomainError):
        window_bounds(Word((1, 2)), 0, 2)
    with pytest.raises(DomainError):
        window_bounds(Word((1, 2)), 3, 2)


def test_nonaffine_certificate_finds_a_witness_pair():
    ok, pair = nonessentially_affine_certificate([(1,), (2,)])
    assert ok and set(map(tuple, pair)) == {(1,), (2,)}
    ok, pair = nonessentially_affine_certificate([(2,), (1, 1)])
    assert ok
    with pytest.raises(DomainError):
        nonessentially_affine_certificate([(1,)])
    with pytest.raises(DomainError):
        nonessentially_affine_certificate([(1,), (1, 2)])


def test_digit_cap_is_the_floor():
    assert digit_cap(3) == 3
    assert digit_cap(QuadraticSurd(0, 2, 1, 3)) == 3
    assert digit_cap(Fraction(7, 2)) == 3
    assert digit_cap(4) == 4
    assert digit_cap(Fraction(41, 4)) == 10
    with pytest.raises(DomainError):
        digit_cap(Fraction(29, 10))
