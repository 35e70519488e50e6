"""Markov and Lagrange values of periodic digit sequences and window bounds.

A bi-infinite sequence theta of positive integers has, at each position n,
the two continued-fraction values alpha_n = [a_n; a_{n+1}, ...] and
beta_n = [0; a_{n-1}, a_{n-2}, ...].  The Markov value is the sup of
alpha_n + beta_n and the Lagrange value is the limsup.  For periodic and
eventually periodic sequences these are exact quadratic surds; for a finite
window with free digit-<=T tails they are bracketed by exact surd bounds
obtained from the extremal alternating tails.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .surds import QuadraticSurd, as_surd, floor_of, surd_compare, surd_from_quadratic
from .words import Word, evaluate_with_tail, matrix_for, transpose


@dataclass(frozen=True)
class PeriodicWord:
    """The bi-infinite periodic repetition of a block, stored as its primitive root."""

    period: Word

    def __post_init__(self):
        w = Word(self.period)
        if len(w) == 0:
            raise DomainError("period must be nonempty")
        object.__setattr__(self, "period", _primitive_root(w))


def _primitive_root(w: Word) -> Word:
    n = len(w)
    for p in range(1, n):
        if n % p == 0 and tuple(w) == tuple(w[:p]) * (n // p):
            return Word(w[:p])
    return w


def _as_period(p) -> Word:
    if isinstance(p, PeriodicWord):
        return p.period
    return PeriodicWord(Word(p)).period


@dataclass(frozen=True)
class WindowBound:
    """Certified range of alpha_j + beta_j over all digit-capped extensions."""

    j: int
    lower: QuadraticSurd
    upper: QuadraticSurd


def fixed_point_quadratic(word: Word) -> tuple[int, int, int]:
    """Coefficients (A, B, C) with A x^2 + B x + C = 0 satisfied by [0; word, word, ...].

    From x = (p/x' form): A = q_prev, B = q - p_prev, C = -p.
    """
    w = Word(word)
    if len(w) == 0:
        raise DomainError("quadratic needs a nonempty word")
    m = matrix_for(w)
    return m.q_prev, m.q - m.p_prev, -m.p


def periodic_value(p) -> QuadraticSurd:
    """Exact value of the purely periodic continued fraction [0; p, p, p, ...]."""
    w = _as_period(p)
    A, B, C = fixed_point_quadratic(w)
    return surd_from_quadratic(A, B, C)


def markov_value_periodic(p) -> QuadraticSurd:
    """Max of alpha_n + beta_n over one period of the bi-infinite periodic sequence.

    At position j the forward value is 1/[0; rotation_j, ...] and the backward
    value is the periodic continued fraction of the reversed rotation; both lie
    in the same quadratic field because rotation preserves the continuant trace.
    """
    w = _as_period(p)
    n = len(w)
    best = None
    for j in range(n):
        rot = Word(w[j:] + w[:j])
        alpha = periodic_value(rot).reciprocal()
        beta = periodic_value(transpose(rot))
        val = alpha + beta
        if best is None or val > best:
            best = val
    return best


def lagrange_value_eventually_periodic(head, tail_left, tail_right) -> QuadraticSurd:
    """Lagrange value of (tail_left)^inf head (tail_right)^inf.

    The limsup is reached at positions arbitrarily deep in the right tail,
    where the forward value is periodic and the backward value converges to
    the reversed periodic expansion, so the result is the Markov value of the
    right tail alone; head and left tail are validated but cannot contribute.
    """
    Word(head)
    _as_period(tail_left)
    return markov_value_periodic(_as_period(tail_right))


def tail_extremes(T: int) -> tuple[QuadraticSurd, QuadraticSurd]:
    """Smallest and largest continuation value [b_1; b_2, ...] over digits in [1, T].

    Continued fractions increase in even-indexed and decrease in odd-indexed
    digits, so the extremes are the alternating tails: the max is
    M = [T; 1, T, 1, ...], the positive root of x^2 - Tx - T, and the min is
    mu = [1; T, 1, T, ...] = 1 + 1/M.
    """
    if not isinstance(T, int) or T < 1:
        raise DomainError("digit cap T must be a positive integer")
    big = surd_from_quadratic(1, -T, -T)
    small = 1 + big.reciprocal()
    return small, big


def alphabet_sum_bound(T: int) -> QuadraticSurd:
    """Largest possible alpha_n + beta_n over all sequences with digits <= T.

    Equals M + 1/mu with the extremal tails above; for T = 1 this is sqrt(5)
    and for T = 2 it is sqrt(12), so every {1,2}-sequence has Markov value at
    most sqrt(12).
    """
    small, big = tail_extremes(T)
    return big + small.reciprocal()


def window_bounds(word: Word, j: int, T: int) -> WindowBound:
    """Certified min and max of alpha_j + beta_j over all digit-<=T extensions.

    The word fixes digits a_1..a_n and j points into it (1-based).  Forward
    and backward sides are independent, and each is monotone in its free tail,
    so evaluating at the two extremal tails and taking min/max per side is
    exact.
    """
    w = Word(word)
    n = len(w)
    if not 1 <= j <= n:
        raise DomainError(f"position {j} outside 1..{n}")
    small, big = tail_extremes(T)
    right = w[j - 1:]
    left = transpose(w[: j - 1])
    alphas = [evaluate_with_tail(right, y).reciprocal() for y in (small, big)]
    betas = [evaluate_with_tail(left, y) for y in (small, big)]
    a_lo, a_hi = (alphas[0], alphas[1]) if alphas[0] < alphas[1] else (alphas[1], alphas[0])
    b_lo, b_hi = (betas[0], betas[1]) if betas[0] < betas[1] else (betas[1], betas[0])
    return WindowBound(j=j, lower=a_lo + b_lo, upper=a_hi + b_hi)


def nonessentially_affine_certificate(B) -> tuple[bool, object]:
    """Check that two blocks of B have non-proportional fixed-point quadratics.

    Proportional quadratics would share both roots, forcing the block fixed
    points to coincide; a non-proportional pair certifies that the Cantor set
    of free concatenations of B is not affinely self-similar.  Returns
    (True, (block1, block2)) on success, (False, None) if every pair is
    proportional.
    """
    words = [Word(w) for w in B]
    if len(words) < 2:
        raise DomainError("need at least two blocks")
    for i, wi in enumerate(words):
        for wj in words[i + 1:]:
            k = min(len(wi), len(wj))
            if tuple(wi[:k]) == tuple(wj[:k]):
                raise DomainError(f"{wi!r} and {wj!r} violate the prefix-free requirement")
    quads = [fixed_point_quadratic(w) for w in words]
    for i in range(len(words)):
        Ai, Bi, Ci = quads[i]
        for j in range(i + 1, len(words)):
            Aj, Bj, Cj = quads[j]
            if Ai * Bj - Aj * Bi or Ai * Cj - Aj * Ci or Bi * Cj - Bj * Ci:
                return True, (words[i], words[j])
    return False, None


def digit_cap(t) -> int:
    """Alphabet cap floor(t) for sequences with Markov value <= t; needs t >= 3.

    Any digit a_n forces a position value above a_n, so admissible sequences
    at level t use digits at most floor(t).  Below 3 the spectra are discrete
    and handled by the classical-facts module instead.
    """
    tv = as_surd(t)
    if surd_compare(tv, 3) < 0:
        raise DomainError("digit_cap needs t >= 3")
    return floor_of(tv)
