"""Classical exact landmarks: the discrete spectrum, Hall sums, and exact-order words.

Below 3 the spectra are a discrete list of exact surds indexed by the tree of
integer triples solving x^2 + y^2 + z^2 = 3xyz.  Above, interval arithmetic
on the digit-<=4 Cantor set proves Hall's sum covering, decomposes any target
into two continued fractions, and builds words whose position sums approach a
chosen cutoff at factorially sparse positions, giving spectra points of exact
order.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from itertools import product

from .bounds import log_bounds
from .errors import DomainError, ResourceCapError
from .surds import QuadraticSurd, as_surd, floor_of, surd_compare
from .symbolic import tail_extremes, window_bounds
from .words import Word, evaluate_with_tail

_HALL_LO = QuadraticSurd(-1, 1, 1, 2)   # sqrt(2) - 1
_HALL_HI = QuadraticSurd(-4, 4, 1, 2)   # 4 (sqrt(2) - 1)
_DECOMPOSE_NODE_CAP = 100_000


@dataclass(frozen=True)
class MarkovTriple:
    """Ordered solution x <= y <= z of x^2 + y^2 + z^2 = 3xyz."""

    x: int
    y: int
    z: int

    def __post_init__(self):
        if not (0 < self.x <= self.y <= self.z):
            raise DomainError("triple must satisfy 0 < x <= y <= z")
        if self.x**2 + self.y**2 + self.z**2 != 3 * self.x * self.y * self.z:
            raise DomainError(f"({self.x}, {self.y}, {self.z}) does not solve the triple equation")

    @property
    def spectrum_point(self) -> QuadraticSurd:
        """The exact spectra point sqrt(9 z^2 - 4) / z attached to the triple."""
        return QuadraticSurd(0, 1, self.z, 9 * self.z**2 - 4)


def markov_triples(count: int) -> list:
    """First count triples from the root (1,1,1), sorted by (z, y, x).

    Each triple (x, y, z) branches to (x, z, 3xz - y) and (y, z, 3yz - x);
    the third neighbor is its parent.  A heap pops triples in (z, y, x)
    order, which is safe because children never have a smaller maximum.
    """
    if count < 1:
        raise DomainError("count must be at least 1")
    heap = [(1, 1, 1)]
    seen = set(heap)
    out = []
    while heap and len(out) < count:
        z, y, x = heapq.heappop(heap)
        out.append(MarkovTriple(x, y, z))
        for child in ((x, z, 3 * x * z - y), (y, z, 3 * y * z - x)):
            key = (child[2], child[1], child[0])
            if key not in seen:
                seen.add(key)
                heapq.heappush(heap, key)
    return out


def markov_spectrum_below_3(count: int = 3) -> list:
    """First count exact spectra points below 3, increasing.

    The points sqrt(9 z^2 - 4) / z increase with the triple maximum z, so the
    (z, y, x) ordering of the tree yields them sorted; duplicate maxima are
    skipped.
    """
    if count < 1:
        raise DomainError("count must be at least 1")
    points = []
    seen_z = set()
    need = count
    batch = max(2 * count, 8)
    while len(points) < count:
        for triple in markov_triples(batch):
            if triple.z not in seen_z:
                seen_z.add(triple.z)
                points.append(triple.spectrum_point)
                if len(points) == need:
                    break
        batch *= 2
    return points


def freiman_constant() -> QuadraticSurd:
    """The exact endpoint past which the spectra contain every real number."""
    return QuadraticSurd(2221564096, 283748, 491993569, 462)


def jarnik_lower(m: int) -> Fraction:
    """Certified lower bound 1 - 1/(m ln 2) for the digit-<=m Cantor set dimension.

    Valid for m > 8.  Rounding ln 2 down makes the subtracted term larger, so
    the returned rational is a true lower bound.
    """
    if not isinstance(m, int) or m <= 8:
        raise DomainError("the bound needs an integer digit cap m > 8")
    ln2_lo = log_bounds(Fraction(2), 96)[0]
    return 1 - Fraction(1) / (m * ln2_lo)


def _hull(word: Word, small, big) -> tuple:
    """Exact hull of [0; word, tail] over digit-<=4 tails in [small, big]."""
    a = evaluate_with_tail(word, small)
    b = evaluate_with_tail(word, big)
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class HallCoverage:
    """Result of the sum-covering sweep at one subdivision depth."""

    depth: int
    words: int
    pairs: int
    covered: bool
    target_lo: QuadraticSurd
    target_hi: QuadraticSurd
    reached: QuadraticSurd


def hall_coverage(depth: int = 4) -> HallCoverage:
    """Prove that pairwise sums of digit-<=4 hulls cover [sqrt2-1, 4(sqrt2-1)].

    All 4^depth hulls are summed pairwise and swept left to right with exact
    comparisons (every endpoint lies in the field of sqrt 2).  Coverage at any
    depth proves the classical sum theorem for the digit-<=4 Cantor set.
    """
    if depth < 1:
        raise DomainError("depth must be at least 1")
    small, big = tail_extremes(4)
    hulls = [_hull(Word(w), small, big) for w in product((1, 2, 3, 4), repeat=depth)]
    sums = []
    for i, (alo, ahi) in enumerate(hulls):
        for blo, bhi in hulls[i:]:
            sums.append((alo + blo, ahi + bhi))
    sums.sort(key=cmp_to_key(lambda p, q: surd_compare(p[0], q[0])))
    reached = _HALL_LO
    for lo, hi in sums:
        if surd_compare(lo, reached) > 0:
            break
        if surd_compare(hi, reached) > 0:
            reached = hi
            if surd_compare(reached, _HALL_HI) >= 0:
                break
    covered = surd_compare(reached, _HALL_HI) >= 0
    return HallCoverage(depth=depth, words=len(hulls), pairs=len(sums), covered=covered,
                        target_lo=_HALL_LO, target_hi=_HALL_HI, reached=reached)


_PAIR_ORDER = sorted(product((1, 2, 3, 4), repeat=2), key=lambda p: (abs(p[0] - p[1]), p[0], p[1]))


def hall_decompose(s, depth: int) -> tuple:
    """Digit words (alpha, beta) with s inside hull(alpha) + hull(beta) at the depth.

    Requires s in [sqrt2-1, 4(sqrt2-1)].  Depth-first search extends both
    words one digit at a time, keeping a pair only while the exact closed
    hull sum still contains s, and backtracks out of dead ends (a hull
    contains gaps of the Cantor set, so containment can fail later).  The
    digit pairs are tried balanced-first, making the result deterministic.
    """
    if depth < 1:
        raise DomainError("depth must be at least 1")
    sv = as_surd(s)
    if surd_compare(sv, _HALL_LO) < 0 or surd_compare(sv, _HALL_HI) > 0:
        raise DomainError(f"{s} is outside the coverable interval [sqrt2-1, 4(sqrt2-1)]")
    small, big = tail_extremes(4)
    nodes = 0

    def search(wa: tuple, wb: tuple):
        nonlocal nodes
        nodes += 1
        if nodes > _DECOMPOSE_NODE_CAP:
            raise ResourceCapError(f"decomposition exceeded {_DECOMPOSE_NODE_CAP} nodes")
        if len(wa) == depth:
            return wa, wb
        for d1, d2 in _PAIR_ORDER:
            na, nb = wa + (d1,), wb + (d2,)
            alo, ahi = _hull(Word(na), small, big)
            blo, bhi = _hull(Word(nb), small, big)
            if surd_compare(sv, alo + blo) < 0 or surd_compare(sv, ahi + bhi) > 0:
                continue
            hit = search(na, nb)
            if hit is not None:
                return hit
        return None

    found = search((), ())
    if found is None:
        raise DomainError(f"no digit-<=4 decomposition of {s} at depth {depth}")
    return Word(found[0]), Word(found[1])


@dataclass(frozen=True)
class ExactOrderPlan:
    """A word whose position sums approach t only at factorially sparse positions.

    The word is a stream of ones with block r inserted after the r!-th one;
    block r reads (m+1, b_{2r-1}..b_1, n, a_1..a_{2r-1}, m+1), where
    [0; a...] + [0; b...] = s = t - n comes from a sum decomposition and the
    m+1 flanks keep every other position well below t.  block_positions holds
    the index (1-based) of each block's central n digit.
    """

    t: QuadraticSurd
    m: int
    n: int
    s: QuadraticSurd
    alpha: Word
    beta: Word
    insertions: int
    word: Word
    block_positions: tuple


def exact_order_word(t, insertions: int) -> ExactOrderPlan:
    """Build the insertion word for cutoff t >= 7 with the given block count."""
    if insertions < 1:
        raise DomainError("need at least one insertion")
    tv = as_surd(t)
    if surd_compare(tv, 7) < 0:
        raise DomainError("exact-order construction needs t >= 7")
    m = floor_of(tv) - 3
    plan_n = None
    for n in (m + 3, m + 2):
        s = tv - n
        if surd_compare(s, _HALL_LO) >= 0 and surd_compare(s, _HALL_HI) <= 0:
            plan_n = n
            break
    if plan_n is None:
        raise DomainError(f"t = {t} leaves no representable fractional part")
    n = plan_n
    s = tv - n
    span = 2 * insertions - 1
    alpha, beta = hall_decompose(s, 2 * insertions + 8)
    digits = []
    positions = []
    ones_emitted = 0
    target_ones = 1
    for r in range(1, insertions + 1):
        digits.extend([1] * (target_ones - ones_emitted))
        ones_emitted = target_ones
        target_ones *= r + 1
        block_span = 2 * r - 1
        block = (m + 1,) + tuple(reversed(beta[:block_span])) + (n,) + tuple(alpha[:block_span]) + (m + 1,)
        positions.append(len(digits) + 1 + block_span + 1)
        digits.extend(block)
    digits.extend([1] * 6)
    assert span <= len(alpha)
    return ExactOrderPlan(t=tv, m=m, n=n, s=s, alpha=alpha, beta=beta,
                          insertions=insertions, word=Word(digits),
                          block_positions=tuple(positions))


@dataclass(frozen=True)
class ExactOrderReport:
    """Window check of an insertion word against its target cutoff."""

    ok: bool
    block_errors: tuple
    off_block_margin: object
    tol: Fraction


def exact_order_verify(plan: ExactOrderPlan, tol: Fraction = Fraction(1, 10**4)) -> ExactOrderReport:
    """Check the deepest block window sits within tol of t and all else below t.

    Every position of the word gets an exact free-tail window at the full
    digit cap.  Block centers must bracket t ever more tightly (the last
    within tol); every other position must stay strictly below t, with the
    minimum margin reported.
    """
    tv = plan.t
    cap = floor_of(tv)
    w = plan.word
    block_set = set(plan.block_positions)
    errors = []
    margin = None
    for j in range(1, len(w) + 1):
        wb = window_bounds(w, j, cap)
        if j in block_set:
            gap_lo = tv - wb.lower
            gap_hi = wb.upper - tv
            errors.append(gap_lo if surd_compare(gap_lo, gap_hi) >= 0 else gap_hi)
        else:
            gap = tv - wb.upper
            if margin is None or gap < margin:
                margin = gap
    ok = (surd_compare(errors[-1], tol) <= 0
          and margin is not None and surd_compare(margin, 0) > 0)
    return ExactOrderReport(ok=ok, block_errors=tuple(errors), off_block_margin=margin, tol=tol)
