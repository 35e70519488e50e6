"""Finite continued fraction words: convergents, cylinders, sizes, branches.

All arithmetic is exact on Python integers and `Fraction`s.  The convergent
recursion uses the seed p_0 = 0, p_{-1} = 1, q_0 = 1, q_{-1} = 0, so that
after reading digits a_1..a_k the state holds (p_k, p_{k-1}, q_k, q_{k-1})
with p_1 = 1 and q_1 = a_1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .bounds import floor_log
from .errors import DomainError


class Word(tuple):
    """A finite word of partial quotients; every digit is an integer >= 1."""

    def __new__(cls, digits: Iterable[int] = ()):
        t = tuple(digits)
        for d in t:
            if not isinstance(d, int) or isinstance(d, bool) or d < 1:
                raise DomainError(f"partial quotients must be integers >= 1, got {d!r}")
        return super().__new__(cls, t)

    def __add__(self, other):
        return Word(tuple.__add__(self, Word(other)))

    def __radd__(self, other):
        return Word(other) + self

    def __getitem__(self, item):
        got = tuple.__getitem__(self, item)
        return Word(got) if isinstance(item, slice) else got

    def transpose(self) -> "Word":
        return Word(reversed(self))

    def __repr__(self) -> str:
        return f"Word{tuple(self)!r}"


@dataclass(frozen=True)
class ConvergentMatrix:
    """Convergent state (p_k, p_{k-1}, q_k, q_{k-1}).

    Viewed as the 2x2 matrix [[q, q_prev], [p, p_prev]] it multiplies under
    word concatenation, which is Euler's continuant identity.
    """

    p: int
    p_prev: int
    q: int
    q_prev: int

    @classmethod
    def seed(cls) -> "ConvergentMatrix":
        return cls(0, 1, 1, 0)

    def extend(self, digit: int) -> "ConvergentMatrix":
        return ConvergentMatrix(
            digit * self.p + self.p_prev,
            self.p,
            digit * self.q + self.q_prev,
            self.q,
        )

    def compose(self, other: "ConvergentMatrix") -> "ConvergentMatrix":
        """Matrix of the concatenated word, self's digits first."""
        return ConvergentMatrix(
            self.p * other.q + self.p_prev * other.p,
            self.p * other.q_prev + self.p_prev * other.p_prev,
            self.q * other.q + self.q_prev * other.p,
            self.q * other.q_prev + self.q_prev * other.p_prev,
        )

    @property
    def det(self) -> int:
        return self.p * self.q_prev - self.p_prev * self.q

    def value(self) -> Fraction:
        return Fraction(self.p, self.q)

    def size(self) -> Fraction:
        return Fraction(1, self.q * (self.q + self.q_prev))


def matrix_for(word) -> ConvergentMatrix:
    m = ConvergentMatrix.seed()
    for d in Word(word):
        m = m.extend(d)
    return m


def convergents(word) -> list[ConvergentMatrix]:
    """All convergent states of a nonempty word, one per prefix length."""
    w = Word(word)
    if not w:
        raise DomainError("convergents of the empty word are undefined")
    out = []
    m = ConvergentMatrix.seed()
    for d in w:
        m = m.extend(d)
        out.append(m)
    return out


@dataclass(frozen=True)
class CylinderInterval:
    """The closed interval I(word) of reals whose expansion starts with word."""

    word: Word
    left: Fraction
    right: Fraction

    @property
    def size(self) -> Fraction:
        return self.right - self.left


def cylinder(word) -> CylinderInterval:
    w = Word(word)
    if not w:
        raise DomainError("the empty word has no cylinder interval")
    m = matrix_for(w)
    a = Fraction(m.p, m.q)
    b = Fraction(m.p + m.p_prev, m.q + m.q_prev)
    lo, hi = (a, b) if a <= b else (b, a)
    return CylinderInterval(w, lo, hi)


def size(word) -> Fraction:
    """s(word) = 1/(q_n (q_n + q_{n-1})); the empty word has size 1."""
    w = Word(word)
    if not w:
        return Fraction(1)
    return matrix_for(w).size()


def size_inverse(word) -> int:
    w = Word(word)
    if not w:
        return 1
    m = matrix_for(w)
    return m.q * (m.q + m.q_prev)


def r_floor(word) -> int:
    """r(word) = floor(log 1/s(word)), decided by certified log brackets.

    The empty word returns 0, matching the size-1 convention, so the parent
    of a length-1 word has a well defined level.
    """
    return floor_log(size_inverse(word))


def transpose(word) -> Word:
    return Word(word).transpose()


@dataclass(frozen=True)
class Mobius:
    """x -> (a*x + b)/(c*x + d) with integer coefficients."""

    a: int
    b: int
    c: int
    d: int

    def apply(self, x):
        return (self.a * x + self.b) / (self.c * x + self.d)


def mobius_branch(word) -> Mobius:
    """The n-th Gauss iterate restricted to I(word): (q x - p)/(-q' x + p')."""
    w = Word(word)
    if not w:
        raise DomainError("mobius_branch needs a nonempty word")
    m = matrix_for(w)
    return Mobius(m.q, -m.p, -m.q_prev, m.p_prev)


def derivative_range(word) -> tuple[int, int]:
    """Exact bounds [q_n^2, 4 q_n^2] for |psi'| on I(word)."""
    w = Word(word)
    if not w:
        raise DomainError("derivative_range needs a nonempty word")
    q = matrix_for(w).q
    return q * q, 4 * q * q


def evaluate_with_tail(word, tail):
    """Value of [0; word, tail] where tail is the continuation value >= 1.

    Works for the empty word (gives 1/tail).  The tail may be a Fraction or a
    quadratic surd; the result has the same exact type.
    """
    m = matrix_for(word)
    return (tail * m.p + m.p_prev) / (tail * m.q + m.q_prev)


def cf_value(word) -> Fraction:
    """Exact value of the finite continued fraction [0; word]."""
    w = Word(word)
    if not w:
        raise DomainError("cf_value needs a nonempty word")
    m = matrix_for(w)
    return Fraction(m.p, m.q)
