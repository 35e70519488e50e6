"""Exact arithmetic and a total order for real quadratic surds (a + b sqrt(d))/c.

Canonical form: c > 0, gcd(a, b, c) = 1, d squarefree; rational values store
b = 0 and d = 0.  Field operations are closed for operands over the same
radicand (or a rational operand); values over distinct radicands can always
be *compared* exactly, via linear independence of square roots of distinct
squarefree integers plus certified interval refinement, but mixing them
arithmetically raises FieldMixError.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .bounds import sqrt_bounds
from .errors import ComparisonUnresolved, DomainError, FieldMixError

_SMALL_PRIME_CAP = 100_000
_RADICAND_CAP = 10**15


def _square_split(n: int) -> tuple[int, int]:
    """Write n = f*f*s with s squarefree.

    Trial division removes every prime below 100000; the cofactor is then 1,
    prime, a prime square, or a product of two distinct primes, all of which
    resolve by a single integer square root test -- provided n < 10**15,
    which is enforced.
    """
    if n < 0:
        raise DomainError("radicand must be nonnegative")
    if n >= _RADICAND_CAP:
        raise DomainError(f"radicand {n} exceeds the canonicalization cap {_RADICAND_CAP}")
    f, s, m = 1, 1, n
    p = 2
    while p * p <= m and p < _SMALL_PRIME_CAP:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            if e % 2:
                s *= p
            f *= p ** (e // 2)
        p += 1 if p == 2 else 2
    if m > 1:
        r = math.isqrt(m)
        if r * r == m:
            f *= r
        else:
            s *= m
    return f, s


@dataclass(frozen=True)
class QuadraticSurd:
    """Canonical exact value (a + b*sqrt(d))/c."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        a, b, c, d = self.a, self.b, self.c, self.d
        for v in (a, b, c, d):
            if not isinstance(v, int) or isinstance(v, bool):
                raise DomainError("QuadraticSurd fields must be integers")
        if c == 0:
            raise DomainError("denominator c must be nonzero")
        if d < 0:
            raise DomainError("only real surds are supported (d >= 0)")
        if b == 0 or d == 0:
            b, d = 0, 0
        else:
            f, s = _square_split(d)
            b, d = b * f, s
            if d == 1:
                a, b, d = a + b, 0, 0
        if c < 0:
            a, b, c = -a, -b, -c
        g = math.gcd(math.gcd(abs(a), abs(b)), c)
        if g > 1:
            a, b, c = a // g, b // g, c // g
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rational(cls, value) -> "QuadraticSurd":
        f = Fraction(value)
        return cls(f.numerator, 0, f.denominator, 0)

    @classmethod
    def sqrt_of(cls, n: int) -> "QuadraticSurd":
        if n < 0:
            raise DomainError("sqrt_of needs n >= 0")
        return cls(0, 1, 1, n)

    # -- structure ---------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise DomainError(f"{self!r} is irrational")
        return Fraction(self.a, self.c)

    def conjugate(self) -> "QuadraticSurd":
        return QuadraticSurd(self.a, -self.b, self.c, self.d)

    def __float__(self) -> float:
        # reporting only; proofs never consume this
        return (self.a + self.b * math.sqrt(self.d)) / self.c

    def __repr__(self) -> str:
        return f"QuadraticSurd(a={self.a}, b={self.b}, c={self.c}, d={self.d})"

    # -- arithmetic (same field or rational) -------------------------------

    def _compatible_d(self, other: "QuadraticSurd") -> int:
        if self.d == 0:
            return other.d
        if other.d == 0 or other.d == self.d:
            return self.d
        raise FieldMixError(
            f"cannot combine sqrt({self.d}) with sqrt({other.d}) arithmetically; "
            "comparisons across fields are supported instead"
        )

    def __add__(self, other):
        o = _as_surd(other)
        if o is None:
            return NotImplemented
        d = self._compatible_d(o)
        return QuadraticSurd(
            self.a * o.c + o.a * self.c,
            self.b * o.c + o.b * self.c,
            self.c * o.c,
            d,
        )

    __radd__ = __add__

    def __neg__(self):
        return QuadraticSurd(-self.a, -self.b, self.c, self.d)

    def __sub__(self, other):
        o = _as_surd(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _as_surd(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = _as_surd(other)
        if o is None:
            return NotImplemented
        d = self._compatible_d(o)
        return QuadraticSurd(
            self.a * o.a + self.b * o.b * max(self.d, o.d),
            self.a * o.b + self.b * o.a,
            self.c * o.c,
            d,
        )

    __rmul__ = __mul__

    def reciprocal(self) -> "QuadraticSurd":
        norm = self.a * self.a - self.b * self.b * self.d
        if norm == 0:
            if self.a == 0 and self.b == 0:
                raise ZeroDivisionError("reciprocal of zero surd")
            raise DomainError("degenerate surd with zero norm")
        return QuadraticSurd(self.c * self.a, -self.c * self.b, norm, self.d)

    def __truediv__(self, other):
        o = _as_surd(other)
        if o is None:
            return NotImplemented
        self._compatible_d(o)
        return self * o.reciprocal()

    def __rtruediv__(self, other):
        o = _as_surd(other)
        if o is None:
            return NotImplemented
        return o * self.reciprocal()

    def __abs__(self):
        return -self if self._sign() < 0 else self

    # -- exact order -------------------------------------------------------

    def _sign(self) -> int:
        a, b, d = self.a, self.b, self.d
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return (b > 0) - (b < 0)
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        lhs, rhs = a * a, b * b * d
        if a > 0:  # b < 0
            return (lhs > rhs) - (lhs < rhs)
        return (rhs > lhs) - (rhs < lhs)

    def _cmp(self, other) -> int:
        o = _as_surd(other)
        if o is None:
            return NotImplemented
        if self.d == o.d or self.d == 0 or o.d == 0:
            return (self - o)._sign()
        return sign_of_combination(
            [
                (Fraction(self.a, self.c), 1),
                (Fraction(self.b, self.c), self.d),
                (Fraction(-o.a, o.c), 1),
                (Fraction(-o.b, o.c), o.d),
            ]
        )

    def __lt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c >= 0

    def __eq__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c == 0

    def __hash__(self):
        if self.is_rational:
            return hash(Fraction(self.a, self.c))
        return hash((self.a, self.b, self.c, self.d))

    # -- certified numeric bracket ----------------------------------------

    def bounds(self, bits: int = 96) -> tuple[Fraction, Fraction]:
        """Certified rational bracket of the value."""
        if self.is_rational:
            f = Fraction(self.a, self.c)
            return f, f
        rlo, rhi = sqrt_bounds(self.d, bits)
        if self.b >= 0:
            lo = Fraction(self.a + 0, 1) + self.b * rlo
            hi = Fraction(self.a + 0, 1) + self.b * rhi
        else:
            lo = Fraction(self.a + 0, 1) + self.b * rhi
            hi = Fraction(self.a + 0, 1) + self.b * rlo
        return lo / self.c, hi / self.c


def _as_surd(x):
    if isinstance(x, QuadraticSurd):
        return x
    if isinstance(x, bool):
        return None
    if isinstance(x, int):
        return QuadraticSurd(x, 0, 1, 0)
    if isinstance(x, Fraction):
        return QuadraticSurd(x.numerator, 0, x.denominator, 0)
    return None


def as_surd(x) -> QuadraticSurd:
    """Coerce an int, Fraction or QuadraticSurd to a QuadraticSurd."""
    s = _as_surd(x)
    if s is None:
        raise DomainError(f"cannot interpret {x!r} as an exact surd")
    return s


_SIGN_BITS = (64, 128, 256, 512, 1024, 2048)


def sign_of_combination(terms: Iterable[tuple[Fraction, int]]) -> int:
    """Exact sign of sum(coeff * sqrt(rad)) over rational coeffs, rads >= 0.

    Radicands are reduced to squarefree form and like terms combined; square
    roots of distinct squarefree integers are linearly independent over Q, so
    a nonzero combination is bounded away from zero and interval refinement
    terminates.
    """
    combined: dict[int, Fraction] = {}
    for coeff, rad in terms:
        coeff = Fraction(coeff)
        if coeff == 0:
            continue
        if rad < 0:
            raise DomainError("negative radicand in combination")
        if rad == 0:
            continue
        f, s = _square_split(rad)
        key = 1 if s == 1 else s
        combined[key] = combined.get(key, Fraction(0)) + coeff * f
    combined = {k: v for k, v in combined.items() if v != 0}
    if not combined:
        return 0
    if len(combined) == 1:
        ((_, v),) = combined.items()
        return 1 if v > 0 else -1
    for bits in _SIGN_BITS:
        lo = hi = Fraction(0)
        for rad, coeff in combined.items():
            if rad == 1:
                lo += coeff
                hi += coeff
                continue
            rlo, rhi = sqrt_bounds(rad, bits)
            if coeff >= 0:
                lo += coeff * rlo
                hi += coeff * rhi
            else:
                lo += coeff * rhi
                hi += coeff * rlo
        if lo > 0:
            return 1
        if hi < 0:
            return -1
    raise ComparisonUnresolved("radical combination sign ambiguous at maximum precision")


def surd_compare(x, y) -> int:
    """Exact three-way comparison of surds/rationals: -1, 0 or +1."""
    return as_surd(x)._cmp(y)


def surd_from_quadratic(A: int, B: int, C: int) -> QuadraticSurd:
    """The positive root of A x^2 + B x + C = 0 with A >= 0.

    For A = 0 the linear root -C/B must be positive.  For A > 0 the larger
    root (-B + sqrt(B^2 - 4AC))/(2A) is returned when positive.
    """
    if A < 0:
        raise DomainError("positive_root needs A >= 0")
    if A == 0:
        if B == 0:
            raise DomainError("degenerate equation")
        r = Fraction(-C, B)
        if r <= 0:
            raise DomainError("no positive root")
        return QuadraticSurd.from_rational(r)
    disc = B * B - 4 * A * C
    if disc < 0:
        raise DomainError("no real root")
    root = QuadraticSurd(-B, 1, 2 * A, disc)
    if not root > 0:
        raise DomainError("no positive root")
    return root


def floor_of(x) -> int:
    """Exact floor of a surd or rational."""
    s = as_surd(x)
    if s.is_rational:
        return math.floor(Fraction(s.a, s.c))
    for bits in _SIGN_BITS:
        lo, hi = s.bounds(bits)
        flo, fhi = math.floor(lo), math.floor(hi)
        if flo == fhi:
            return flo
        if fhi - flo == 1:
            # the bracket straddles one integer: settle by exact comparison
            return fhi if s >= fhi else flo
    raise ComparisonUnresolved("floor ambiguous at maximum precision")


def decimal_bounds(x, places: int) -> tuple[int, int]:
    """Certified pair (floor(v*10^places), ceil(v*10^places)) for a surd/rational."""
    s = as_surd(x)
    scale = 10**places
    if s.is_rational:
        f = Fraction(s.a, s.c) * scale
        return math.floor(f), math.ceil(f)
    for bits in _SIGN_BITS:
        lo, hi = s.bounds(bits)
        nlo, nhi = math.floor(lo * scale), math.ceil(hi * scale)
        if nhi - nlo <= 1:
            return nlo, nhi
    lo, hi = s.bounds(_SIGN_BITS[-1])
    return math.floor(lo * scale), math.ceil(hi * scale)
