"""Certified Hausdorff-dimension brackets for block Cantor sets and spectra slices.

The dimension of the set of continued fractions built by freely concatenating
a prefix-free family B is pinned between the roots of two pressure equations:
block sizes multiply within a factor of two under concatenation, so
sum (s/2)^d = 1 gives a certified lower root and sum (2s)^d = 1 a certified
upper root.  Both are solved by bisection on exact rationals with directed
log/exp brackets, and refine by raising the concatenation power or the layer
scale.  On top of this sit lower and upper bounds for the dimension of the
spectra below a cutoff t, symbolic exponential towers for modulus bounds,
and their comparison operators.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .admissible import enumerate_admissible
from .bounds import floor_log, floor_scaled_log, log_bounds, pressure_sum_bounds
from .errors import BracketCrossingError, ComparisonUnresolved, DomainError, ResourceCapError
from .surds import QuadraticSurd, as_surd, surd_compare
from .symbolic import alphabet_sum_bound, digit_cap, window_bounds
from .words import ConvergentMatrix, Word, matrix_for, size

_DEFAULT_TOL = Fraction(1, 10**6)
_COARSE_TOL = Fraction(1, 10**4)
_PRESSURE_BITS = (96, 192, 384)
_COMPARE_BITS = (96, 192, 384, 768, 1536)
_POWER_CAP = 200_000


@dataclass(frozen=True)
class DimensionBracket:
    """Certified enclosure lo <= dimension <= hi with construction metadata.

    t is the spectra cutoff when applicable (None for plain block families),
    method names the certificate that produced the lower side, depth is the
    refinement parameter (layer scale or concatenation power), and detail
    carries the witness blocks.
    """

    t: Optional[QuadraticSurd]
    lo: Fraction
    hi: Fraction
    method: str
    depth: int
    detail: Optional[tuple] = None

    def __post_init__(self):
        if not (0 <= self.lo and self.hi <= 1):
            raise BracketCrossingError(f"bracket [{self.lo}, {self.hi}] outside [0, 1]")
        if self.lo > self.hi:
            raise BracketCrossingError(f"lower bound {self.lo} exceeds upper bound {self.hi}")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo


def _require_blocks(B) -> list:
    """Validate a block family: nonempty words, at least two, prefix-free."""
    words = [Word(w) for w in B]
    if len(words) < 2:
        raise DomainError("a block family needs at least two blocks")
    trie: dict = {}
    for w in words:
        if len(w) == 0:
            raise DomainError("blocks must be nonempty")
        node = trie
        for d in w:
            if "$" in node:
                raise DomainError(f"{w!r} extends another block; family must be prefix-free")
            node = node.setdefault(d, {})
        if node:
            raise DomainError(f"{w!r} is a prefix of another block; family must be prefix-free")
        node["$"] = True
    return words


def _classify_sum(logs, d: Fraction) -> str:
    """Place sum exp(d * L_i) against 1 with certified directed sums."""
    for bits in _PRESSURE_BITS:
        slo, shi = pressure_sum_bounds(d, logs, bits)
        if slo >= 1:
            return "ge"
        if shi <= 1:
            return "le"
    return "ambiguous"


def _root_lower(sizes, tol: Fraction) -> Fraction:
    """Certified d with sum (s/2)^d >= 1, hence at most the true lower root.

    The sum is decreasing in d and at least |B| >= 2 at d = 0, so bisection
    starts certified; ambiguity is resolved downward, never moving the
    certified end.
    """
    logs = [log_bounds(s / 2, 192) for s in sizes]
    dlo, dhi = Fraction(0), Fraction(1)
    while dhi - dlo > tol:
        mid = (dlo + dhi) / 2
        if _classify_sum(logs, mid) == "ge":
            dlo = mid
        else:
            dhi = mid
    return dlo


def _root_upper(sizes, tol: Fraction) -> Fraction:
    """Certified d with sum (2s)^d <= 1, hence at least the true upper root.

    The clip at 1 is decided by one exact rational comparison: if the doubled
    sizes already sum to 1 or more, the root is at least 1 and 1 is returned
    (dimensions never exceed 1).
    """
    if sum(2 * s for s in sizes) >= 1:
        return Fraction(1)
    logs = [log_bounds(2 * s, 192) for s in sizes]
    dlo, dhi = Fraction(0), Fraction(1)
    while dhi - dlo > tol:
        mid = (dlo + dhi) / 2
        if _classify_sum(logs, mid) == "le":
            dhi = mid
        else:
            dlo = mid
    return dhi


def pressure_root(B, side: str = "lower", tol: Fraction = _DEFAULT_TOL) -> Fraction:
    """Certified root of the pressure equation for a prefix-free block family.

    side='lower' solves sum (s/2)^d = 1 and returns a value at most the root;
    side='upper' solves sum (2s)^d = 1 and returns a value at least the root,
    clipped at 1.  The factor-two spread absorbs the distortion of block
    concatenation, so the two roots enclose the dimension of the free
    concatenation Cantor set.
    """
    words = _require_blocks(B)
    sizes = [size(w) for w in words]
    if side == "lower":
        return _root_lower(sizes, tol)
    if side == "upper":
        return _root_upper(sizes, tol)
    raise DomainError(f"side must be 'lower' or 'upper', not {side!r}")


def cantor_bracket(B, depth: int, tol: Fraction = _DEFAULT_TOL) -> DimensionBracket:
    """Dimension bracket of the free-concatenation Cantor set of B, refined by power.

    Concatenation powers leave the set unchanged but tighten the pressure
    bracket: the factor-two slack is paid once per depth-sized block instead
    of once per block.  Sizes of B^depth come from continuant matrix products;
    no words are materialized.
    """
    words = _require_blocks(B)
    if depth < 1:
        raise DomainError("depth must be at least 1")
    if len(words) ** depth > _POWER_CAP:
        raise ResourceCapError(f"{len(words)}^{depth} blocks exceed the {_POWER_CAP} cap")
    base = [matrix_for(w) for w in words]
    level = list(base)
    for _ in range(depth - 1):
        level = [m.compose(b) for m in level for b in base]
    sizes = [Fraction(1, m.q * (m.q + m.q_prev)) for m in level]
    lo = _root_lower(sizes, tol)
    hi = _root_upper(sizes, tol)
    return DimensionBracket(t=None, lo=lo, hi=hi, method="pressure-power", depth=depth,
                            detail=tuple(tuple(w) for w in words))


def _free_digit_cap(tv) -> int:
    return digit_cap(tv) if surd_compare(tv, 3) >= 0 else 2


def d_upper(t, m: int) -> Fraction:
    """Upper bound for the spectra dimension at cutoff t from the scale-m cover.

    The outer family covers the admissible set by at most N cylinders whose
    sizes lie within (T+1)^-2 e^-m and e^-m, and the count is submultiplicative
    in the scale up to the same constant, so ln((T+1)^2 N) / m bounds the
    Cantor set dimension; spectra slices live in a sumset of two copies, hence
    the factor two, clipped at 1.
    """
    if m < 1:
        raise DomainError("scale m must be at least 1")
    tv = as_surd(t)
    fam = enumerate_admissible(tv, m, "over")
    if fam.count == 0:
        return Fraction(0)
    cap = _free_digit_cap(tv)
    log_hi = log_bounds(Fraction((cap + 1) ** 2 * fam.count), 96)[1]
    return min(Fraction(1), 2 * log_hi / m)


def _family_windows_ok(blocks, tv):
    """Max window upper over all positions of all block triples, or None past tv.

    Every position of every bi-infinite concatenation of the blocks sits
    inside some block with one full neighbor block on each side, so its value
    lies inside the free-tail window of that triple; a family whose triple
    windows all stay at or below tv generates only admissible sequences.
    """
    T = max(max(b) for b in blocks)
    worst = None
    for left in blocks:
        for mid in blocks:
            for right in blocks:
                w = left + mid + right
                for j in range(1, len(mid) + 1):
                    wb = window_bounds(w, len(left) + j, T)
                    if surd_compare(wb.upper, tv) > 0:
                        return None
                    if worst is None or wb.upper > worst:
                        worst = wb.upper
    return worst


def _alphabet_layer_sizes(r: int) -> list:
    """Cylinder sizes of the scale-r layer of all {1,2}-words."""
    out = []

    def rec(mat):
        s_inv = mat.q * (mat.q + mat.q_prev)
        if floor_log(s_inv) >= r:
            out.append(Fraction(1, s_inv))
            return
        rec(mat.extend(1))
        rec(mat.extend(2))

    seed = ConvergentMatrix.seed()
    rec(seed.extend(1))
    rec(seed.extend(2))
    return out


def _alphabet_bound(effort: int):
    """Lower bound from the full {1,2} alphabet, valid once t >= sqrt(12).

    Every {1,2}-sequence has Markov value at most sqrt(12), so the whole
    scale-r layer is admissible without any per-word certificate; the ladder
    raises r until the doubled pressure root certifies 1 or the effort budget
    ends.
    """
    best = (Fraction(0), ("alphabet-layer", effort, 0))
    for r in range(effort, effort + 7, 2):
        sizes = _alphabet_layer_sizes(r)
        dlo = _root_lower(sizes, _DEFAULT_TOL)
        lo = min(Fraction(1), 2 * dlo)
        if lo > best[0]:
            best = (lo, ("alphabet-layer", r, len(sizes)))
        if lo >= 1:
            break
    return best


def _block_pair_bound(tv):
    """Lower bound from the two-block witness family 2 1^{2m} 2, 2 1^{2m+2} 2.

    The doubled-2 junctions keep every window of every pair triple below 3
    plus a term vanishing in m, so the smallest m with 3 + 2^-m <= t admits a
    certified pair; its doubled lower pressure root bounds the spectra
    dimension from below and shrinks monotonically as t approaches 3.
    """
    delta = tv - 3
    m = 1
    while surd_compare(delta * 2**m, 1) < 0:
        m += 1
        if m > 60:
            return None
    for mm in (m, m + 1, m + 2):
        u = Word((2,) + (1,) * (2 * mm) + (2,))
        v = Word((2,) + (1,) * (2 * mm + 2) + (2,))
        if _family_windows_ok([u, v], tv) is not None:
            dlo = _root_lower([size(u), size(v)], _DEFAULT_TOL)
            return (min(Fraction(1), 2 * dlo), ("block-pair", mm, tuple(u), tuple(v)))
    return None


def _pair_extraction_bound(tv, effort: int):
    """Lower bound from the best certified pair inside the inner family.

    Enumerates the inner family at a moderate scale, then takes the maximum
    doubled pressure root over all pairs whose triple windows certify free
    concatenation at tv.  Scanning all pairs (cheap root first, window
    certificate only for improvements) keeps the result deterministic and
    monotone in t: a larger cutoff only enlarges the certified pair set.
    """
    r_c = min(effort, 10)
    fam = enumerate_admissible(tv, r_c, "under")
    words = list(fam.words)
    if len(words) < 2:
        return None
    sizes = [size(w) for w in words]
    best = None
    for i in range(len(words)):
        for j in range(i + 1, len(words)):
            dlo = _root_lower([sizes[i], sizes[j]], _COARSE_TOL)
            if best is not None and dlo <= best[0]:
                continue
            if _family_windows_ok([words[i], words[j]], tv) is None:
                continue
            best = (dlo, i, j)
    if best is None:
        return None
    lo = min(Fraction(1), 2 * best[0])
    return (lo, ("pair-extraction", r_c, tuple(words[best[1]]), tuple(words[best[2]])))


def d_lower(t, effort: int = 12):
    """Certified lower bound for the spectra dimension at cutoff t > 3.

    Returns (bound, witness).  Three certificates compete: the full {1,2}
    alphabet once t >= sqrt(12), the near-3 block-pair ladder, and pair
    extraction from the enumerated inner family; each is deterministic and
    nondecreasing in t, so their maximum is too.
    """
    if effort < 1:
        raise DomainError("effort must be at least 1")
    tv = as_surd(t)
    if surd_compare(tv, 3) <= 0:
        raise DomainError("dimension lower bounds need t > 3; the spectra below are discrete")
    candidates = [(Fraction(0), ("trivial",))]
    if surd_compare(tv, alphabet_sum_bound(2)) >= 0:
        candidates.append(_alphabet_bound(effort))
    else:
        pair = _block_pair_bound(tv)
        if pair is not None:
            candidates.append(pair)
        extracted = _pair_extraction_bound(tv, effort)
        if extracted is not None:
            candidates.append(extracted)
    return max(candidates, key=lambda c: c[0])


def spectrum_dimension(t, effort: int = 12) -> DimensionBracket:
    """Certified dimension bracket for the spectra slice below cutoff t > 3."""
    tv = as_surd(t)
    if surd_compare(tv, 3) <= 0:
        raise DomainError("spectrum_dimension needs t > 3; the spectra below are discrete")
    lo, witness = d_lower(tv, effort)
    hi = d_upper(tv, effort)
    if lo > hi:
        raise BracketCrossingError(f"lower bound {lo} exceeds upper bound {hi} at t = {tv}")
    return DimensionBracket(t=tv, lo=lo, hi=hi, method=witness[0], depth=effort,
                            detail=witness[1:] or None)


@dataclass(frozen=True)
class TowerExpr:
    """exp iterated height times on a rational base, compared without evaluation.

    exp applied to 0 gives 1, so (0, h) collapses to (1, h-1); beyond that no
    normalization exists and comparisons walk the height down through
    certified logarithm brackets.
    """

    base: Fraction
    height: int

    def __post_init__(self):
        if isinstance(self.base, float):
            raise DomainError("tower base must be an exact rational")
        base = self.base if isinstance(self.base, Fraction) else Fraction(self.base)
        height = self.height
        if height < 0:
            raise DomainError("tower height must be nonnegative")
        if base == 0 and height > 0:
            base, height = Fraction(1), height - 1
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "height", height)


def tower(base, height: int) -> TowerExpr:
    """The value exp(exp(...exp(base))) with height nested exponentials."""
    return TowerExpr(Fraction(base) if not isinstance(base, float) else base, height)


def _tower_vs_rational(tw: TowerExpr, q: Fraction) -> int:
    if tw.height == 0:
        return (tw.base > q) - (tw.base < q)
    if q <= 0:
        return 1
    inner = TowerExpr(tw.base, tw.height - 1)
    for bits in _COMPARE_BITS:
        llo, lhi = log_bounds(q, bits)
        if _tower_vs_rational(inner, lhi) > 0:
            return 1
        if _tower_vs_rational(inner, llo) < 0:
            return -1
    raise ComparisonUnresolved(f"tower comparison against {q} unresolved; the log chain may hit the base exactly")


def tower_compare(a, b) -> int:
    """Exact -1, 0, 1 comparison between towers and rationals.

    Equal heights compare bases exactly; unequal heights peel one exp from
    each side (logarithms of towers are towers); a rational operand descends
    through certified log brackets, which terminates because iterated logs of
    a rational leave the rational field at every level.
    """
    at, bt = isinstance(a, TowerExpr), isinstance(b, TowerExpr)
    if at and bt:
        if a.height == b.height:
            return (a.base > b.base) - (a.base < b.base)
        if a.height > b.height:
            if b.height == 0:
                return _tower_vs_rational(a, b.base)
            return tower_compare(TowerExpr(a.base, a.height - 1), TowerExpr(b.base, b.height - 1))
        return -tower_compare(b, a)
    if at:
        if isinstance(b, float):
            raise DomainError("tower comparisons need exact rationals")
        return _tower_vs_rational(a, Fraction(b))
    if bt:
        return -tower_compare(b, a)
    af, bf = Fraction(a), Fraction(b)
    return (af > bf) - (af < bf)


@dataclass(frozen=True)
class ModulusBound:
    """Certified modulus data for the dimension variation near a cutoff.

    Changing the cutoff by eps moves the dimension by at least the reciprocal
    of an exponential tower of the recorded height; tau and c0 are the window
    and cluster parameters the height was derived from.
    """

    eps: Fraction
    t: QuadraticSurd
    tau: Fraction
    c0: int
    height: int
    tower: TowerExpr

    def cluster_cap(self, n: int) -> TowerExpr:
        """Symbolic cap on the n-th iterated cluster count: below exp^(2n)(c0)."""
        if n < 0:
            raise DomainError("cluster index must be nonnegative")
        return TowerExpr(Fraction(self.c0), 2 * n)


def modulus_delta_lower(eps, t) -> ModulusBound:
    """Certified modulus tower for an eps-variation of the cutoff at t > 3.

    Needs 0 < eps < 1/7.  The tower height is the exact floor of
    (161/eps) ln(4/eps); the dimension moves by at least 1 over the height-h
    tower of ones, which stays symbolic.
    """
    if isinstance(eps, float):
        raise DomainError("eps must be an exact rational")
    e = Fraction(eps)
    if not 0 < e < Fraction(1, 7):
        raise DomainError("eps must lie strictly between 0 and 1/7")
    tv = as_surd(t)
    if surd_compare(tv, 3) <= 0:
        raise DomainError("modulus bounds need t > 3")
    tau = e / 40
    c0_frac = 1600 / e**2
    c0 = -(-c0_frac.numerator // c0_frac.denominator)
    height = floor_scaled_log(161 / e, 4 / e)
    return ModulusBound(eps=e, t=tv, tau=tau, c0=c0, height=height,
                        tower=TowerExpr(Fraction(1), height))
