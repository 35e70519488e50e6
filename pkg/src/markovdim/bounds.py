"""Certified rational brackets for log, exp, sqrt and derived exact floors.

Every function here takes rationals and returns a pair of `Fraction`s that
provably enclose the true real value.  The brackets come from MPFR directed
rounding (via gmpy2), whose results are correctly rounded in the requested
direction at the working precision; converting them back to exact rationals
keeps the rest of the package free of binary floating point semantics.
Floors are decided by refining the bracket until both endpoints agree, never
by rounding a float.
"""

from __future__ import annotations

import math
from fractions import Fraction

import gmpy2

from .errors import ComparisonUnresolved, DomainError

_BITS_SCHEDULE = (96, 192, 384, 768, 1536, 3072)


def _down(bits: int):
    return gmpy2.context(precision=bits, round=gmpy2.RoundDown)


def _up(bits: int):
    return gmpy2.context(precision=bits, round=gmpy2.RoundUp)


def _frac(x) -> Fraction:
    # mpfr.as_integer_ratio() yields gmpy2.mpz values; normalize to built-in
    # ints so downstream isinstance(int) checks and floors behave
    n, d = x.as_integer_ratio()
    return Fraction(int(n), int(d))


def _as_mpq(x) -> "gmpy2.mpq":
    if isinstance(x, int):
        return gmpy2.mpq(x)
    if isinstance(x, Fraction):
        return gmpy2.mpq(x.numerator, x.denominator)
    raise DomainError(f"expected an exact rational, got {type(x).__name__}")


def log_bounds(x, bits: int = 96) -> tuple[Fraction, Fraction]:
    """Certified bracket of ln(x) for rational x > 0."""
    q = _as_mpq(x)
    if q <= 0:
        raise DomainError("log_bounds needs x > 0")
    with _down(bits):
        lo = gmpy2.log(q)
    with _up(bits):
        hi = gmpy2.log(q)
    return _frac(lo), _frac(hi)


def exp_bounds(x, bits: int = 96) -> tuple[Fraction, Fraction]:
    """Certified bracket of exp(x) for rational x."""
    q = _as_mpq(x)
    with _down(bits):
        lo = gmpy2.exp(gmpy2.mpfr(q))
    with _up(bits):
        hi = gmpy2.exp(gmpy2.mpfr(q))
    return _frac(lo), _frac(hi)


def pressure_sum_bounds(scale, log_pairs, bits: int = 96) -> tuple[Fraction, Fraction]:
    """Certified bracket of sum(exp(scale * L_i)) over bracketed exponents.

    log_pairs holds rational (lo_i, hi_i) brackets of each L_i and scale must
    be a positive rational, so scaling preserves bracket orientation; the
    additions round in matching directions, keeping the sum bracket sound for
    any number of terms.
    """
    s = _as_mpq(scale)
    if s <= 0:
        raise DomainError("pressure_sum_bounds needs scale > 0")
    pairs = [(_as_mpq(a), _as_mpq(b)) for a, b in log_pairs]
    with _down(bits):
        lo = gmpy2.mpfr(0)
        for a, _ in pairs:
            lo += gmpy2.exp(gmpy2.mpfr(s * a))
    with _up(bits):
        hi = gmpy2.mpfr(0)
        for _, b in pairs:
            hi += gmpy2.exp(gmpy2.mpfr(s * b))
    return _frac(lo), _frac(hi)


_SQRT_CACHE: dict = {}


def sqrt_bounds(x, bits: int = 96) -> tuple[Fraction, Fraction]:
    """Certified bracket of sqrt(x) for rational x >= 0.

    Integer radicands are cached: surd comparisons ask for the same few
    square roots constantly.
    """
    if isinstance(x, int):
        key = (x, bits)
        hit = _SQRT_CACHE.get(key)
        if hit is not None:
            return hit
    else:
        key = None
    q = _as_mpq(x)
    if q < 0:
        raise DomainError("sqrt_bounds needs x >= 0")
    with _down(bits):
        lo = gmpy2.sqrt(gmpy2.mpfr(q))
    with _up(bits):
        hi = gmpy2.sqrt(gmpy2.mpfr(q))
    out = (_frac(lo), _frac(hi))
    if key is not None and len(_SQRT_CACHE) < 4096:
        _SQRT_CACHE[key] = out
    return out


def pow_bounds(base, exponent, bits: int = 96) -> tuple[Fraction, Fraction]:
    """Certified bracket of base**exponent for rational base > 0 and exponent.

    The exponent participates exactly (as mpq), so only log, the product and
    exp round; for exponent < 0 the inner log must round the opposite way.
    """
    b = _as_mpq(base)
    e = _as_mpq(exponent)
    if b <= 0:
        raise DomainError("pow_bounds needs base > 0")
    if e >= 0:
        with _down(bits):
            lo = gmpy2.exp(gmpy2.mul(e, gmpy2.log(b)))
        with _up(bits):
            hi = gmpy2.exp(gmpy2.mul(e, gmpy2.log(b)))
    else:
        with _up(bits):
            ln_for_lo = gmpy2.log(b)
        with _down(bits):
            ln_for_hi = gmpy2.log(b)
        with _down(bits):
            lo = gmpy2.exp(gmpy2.mul(e, ln_for_lo))
        with _up(bits):
            hi = gmpy2.exp(gmpy2.mul(e, ln_for_hi))
    return _frac(lo), _frac(hi)


def floor_log(x) -> int:
    """Exact floor(ln x) for rational x > 0.

    Refines the bracket until both endpoints share a floor.  ln x is
    irrational for rational x != 1, so the loop terminates.
    """
    q = Fraction(x) if isinstance(x, int) else x
    if q <= 0:
        raise DomainError("floor_log needs x > 0")
    if q == 1:
        return 0
    for bits in _BITS_SCHEDULE:
        lo, hi = log_bounds(q, bits)
        flo, fhi = math.floor(lo), math.floor(hi)
        if flo == fhi:
            return flo
    raise ComparisonUnresolved(f"floor(ln {q}) still ambiguous at {_BITS_SCHEDULE[-1]} bits")


def floor_scaled_log(scale, x) -> int:
    """Exact floor(scale * ln x) for rationals scale and x > 0.

    scale * ln x is irrational unless scale == 0 or x == 1, so refinement
    terminates.
    """
    s = Fraction(scale) if isinstance(scale, int) else scale
    q = Fraction(x) if isinstance(x, int) else x
    if q <= 0:
        raise DomainError("floor_scaled_log needs x > 0")
    if s == 0 or q == 1:
        return 0
    for bits in _BITS_SCHEDULE:
        lo, hi = log_bounds(q, bits)
        cands = (s * lo, s * hi)
        flo = math.floor(min(cands))
        fhi = math.floor(max(cands))
        if flo == fhi:
            return flo
    raise ComparisonUnresolved(f"floor({s} * ln {q}) still ambiguous")
