"""Directed-rounding brackets for logs, exponentials and powers."""

import math
import random
from fractions import Fraction

import pytest

from markovdim.bounds import (exp_bounds, floor_log, floor_scaled_log, log_bounds,
                              pow_bounds, pressure_sum_bounds, sqrt_bounds)
from markovdim.errors import DomainError


def test_log_two_bracket():
    lo, hi = log_bounds(Fraction(2), 96)
    known = Fraction(693147180559945309417232121458, 10**30)
    assert lo <= known <= hi
    assert hi - lo < Fraction(1, 10**20)


def test_log_brackets_tighten_with_bits():
    x = Fraction(355, 113)
    widths = []
    for bits in (64, 128, 256):
        lo, hi = log_bounds(x, bits)
        assert lo < hi
        widths.append(hi - lo)
    assert widths[0] > widths[1] > widths[2]


def test_exp_log_roundtrip_brackets_identity():
    rng = random.Random(20260823)
    for _ in range(60):
        x = Fraction(rng.randint(2, 500), rng.randint(1, 50))
        llo, lhi = log_bounds(x, 128)
        elo, _ = exp_bounds(llo, 128)
        _, ehi = exp_bounds(lhi, 128)
        assert elo <= x <= ehi


def test_sqrt_bounds_squares_and_brackets():
    lo, hi = sqrt_bounds(2, 96)
    assert lo * lo <= 2 <= hi * hi
    lo, hi = sqrt_bounds(49, 96)
    assert lo <= 7 <= hi and hi - lo < Fraction(1, 10**20)
    rng = random.Random(9)
    for _ in range(60):
        n = rng.randint(2, 10**6)
        lo, hi = sqrt_bounds(n, 96)
        assert lo <= hi and lo * lo <= n <= hi * hi


def test_pow_bounds_directions():
    lo, hi = pow_bounds(Fraction(2), Fraction(1, 2), 96)
    assert lo * lo <= 2 <= hi * hi
    lo, hi = pow_bounds(Fraction(2), Fraction(-1, 2), 96)
    # 2^(-1/2): reciprocal direction must still satisfy lo <= true <= hi
    assert lo <= hi
    assert (1 / hi) ** 2 <= 2 <= (1 / lo) ** 2
    lo, hi = pow_bounds(Fraction(9), Fraction(3, 2), 96)
    assert lo <= 27 <= hi


def test_floor_log_exact_on_both_sides_of_powers():
    assert floor_log(1) == 0
    assert floor_log(2) == 0
    assert floor_log(3) == 1
    rng = random.Random(31)
    for _ in range(80):
        n = rng.randint(2, 10**9)
        f = floor_log(n)
        est = math.log(n)
        if abs(est - round(est)) > 1e-9:
            assert f == math.floor(est)


def test_floor_scaled_log_known_value():
    # 1610 * ln 40 = 5939.09..., safely away from an integer
    assert floor_scaled_log(1610, Fraction(40)) == 5939
    assert floor_scaled_log(1, Fraction(2)) == 0
    assert floor_scaled_log(10, Fraction(3)) == 10  # 10 ln 3 = 10.986


def test_pressure_sum_bounds_encloses_known_sum():
    # with exact log brackets for 2 and 3, scale 1 gives 2 + 3 = 5
    l2 = log_bounds(Fraction(2), 128)
    l3 = log_bounds(Fraction(3), 128)
    lo, hi = pressure_sum_bounds(Fraction(1), [l2, l3], 128)
    assert lo <= 5 <= hi
    assert hi - lo < Fraction(1, 10**15)


def test_pressure_sum_bounds_rejects_bad_scale():
    with pytest.raises(DomainError):
        pressure_sum_bounds(Fraction(0), [(Fraction(0), Fraction(1))])


def test_log_rejects_nonpositive():
    with pytest.raises(DomainError):
        log_bounds(Fraction(0))
    with pytest.raises(DomainError):
        log_bounds(Fraction(-3))
