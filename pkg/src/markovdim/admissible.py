"""Certified inner and outer enumeration of admissible words at a size scale.

A word is admissible at level t when some bi-infinite sequence with Markov
value <= t starts its right ray with the word.  That predicate is not
decidable from a finite window, so it is bracketed: prune_over rejects a word
only when a window position certifies every extension exceeds t (outer
family), and certify_under accepts a word only when an explicit all-ones-tail
embedding is certified below t (inner family).  Enumeration walks the digit
tree depth-first in lexicographic order, emitting the scale-r layer, and is
deterministic for any worker count.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import DomainError, ResourceCapError
from .surds import QuadraticSurd, as_surd, surd_compare, surd_from_quadratic
from .symbolic import digit_cap, markov_value_periodic, tail_extremes
from .words import ConvergentMatrix, Word, cylinder, evaluate_with_tail, matrix_for, r_floor, transpose

CERTAINLY_ADMISSIBLE = "certainly-admissible"
CERTAINLY_PRUNED = "certainly-pruned"
UNKNOWN = "unknown"

_SQRT5 = QuadraticSurd(0, 1, 1, 5)
_PHI = surd_from_quadratic(1, -1, -1)  # [1; 1, 1, ...]
_DEFAULT_SLACK = Fraction(1, 10**9)
_TAIL_CHECK_DEPTH = 16
_DEFAULT_NODE_CAP = 2_000_000


@dataclass(frozen=True)
class PruneVerdict:
    """Outcome of a one-sided admissibility test, with the deciding bound."""

    status: str
    witness: Optional[tuple] = None


@dataclass(frozen=True)
class AdmissibleFamily:
    """One enumerated layer: scale r, level t, and the surviving words."""

    t: object
    r: int
    mode: str
    words: tuple
    nodes: int

    @property
    def count(self) -> int:
        return len(self.words)


def _tail_alphabet(t) -> int:
    """Digit cap for free tails: floor(t) at t >= 3, the {1,2} path below."""
    tv = as_surd(t)
    if surd_compare(tv, 3) >= 0:
        return digit_cap(tv)
    return 2


def _alpha_low(mat: ConvergentMatrix, small, big):
    """Min over capped tails y of [a_j; ..., a_n, y], the reciprocal of [0; suffix, y]."""
    lo = None
    for y in (small, big):
        v = (y * mat.q + mat.q_prev) / (y * mat.p + mat.p_prev)
        if lo is None or v < lo:
            lo = v
    return lo


def _beta_low(tmat: ConvergentMatrix, small, big):
    """Min over capped tails y of [0; a_{j-1}, ..., a_1, y] from the reversed-prefix matrix."""
    lo = None
    for y in (small, big):
        v = (y * tmat.p + tmat.p_prev) / (y * tmat.q + tmat.q_prev)
        if lo is None or v < lo:
            lo = v
    return lo


def prune_over(word: Word, t) -> PruneVerdict:
    """Certainly-pruned iff no extension can keep every position at or below t.

    Two certificates: globally, every bi-infinite sequence has Markov value at
    least sqrt(5), so any t below sqrt(5) prunes everything; locally, a window
    position whose tail-minimized value already exceeds t prunes the word.
    Extensions only narrow windows, so the verdict is inherited by every
    longer word.
    """
    w = Word(word)
    tv = as_surd(t)
    if tv < _SQRT5:
        return PruneVerdict(CERTAINLY_PRUNED, (0, _SQRT5))
    T = _tail_alphabet(tv)
    small, big = tail_extremes(T)
    n = len(w)
    prefix_t = ConvergentMatrix.seed()
    prefix_ts = [prefix_t]
    for d in w[:-1]:
        prefix_t = matrix_for(Word((d,))).compose(prefix_ts[-1])
        prefix_ts.append(prefix_t)
    for j in range(1, n + 1):
        lower = _alpha_low(matrix_for(w[j - 1:]), small, big) + _beta_low(prefix_ts[j - 1], small, big)
        if lower > tv:
            return PruneVerdict(CERTAINLY_PRUNED, (j, lower))
    return PruneVerdict(UNKNOWN)


def certify_under(word: Word, t, slack: Fraction = _DEFAULT_SLACK) -> PruneVerdict:
    """Certainly-admissible iff an explicit embedding is certified at or below t - slack.

    Two embeddings are tried.  First ...111 word 111...: every position value
    is an exact number in the field of sqrt(5); word positions are checked one
    by one, tail positions within 16 digits of the word exactly too, and
    deeper tail positions are covered by sqrt(5) plus the width of the
    all-ones cylinder at depth 16, a rational bound below 2.24.  If the ones
    embedding fails (a leading or trailing large digit next to a ones tail can
    overshoot), the periodic embedding word word word... is tried through its
    exact Markov value.
    """
    w = Word(word)
    tv = as_surd(t)
    limit = tv - slack
    ones_value = _ones_embedding_sup(w, limit)
    if ones_value is not None:
        return PruneVerdict(CERTAINLY_ADMISSIBLE, ("ones-tails", ones_value))
    periodic = markov_value_periodic(w)
    if not periodic > limit:
        return PruneVerdict(CERTAINLY_ADMISSIBLE, ("periodic", periodic))
    return PruneVerdict(UNKNOWN, ("periodic", periodic))


def _ones_embedding_sup(w: Word, limit):
    """Certified sup of position values for ...111 w 111..., or None past limit.

    Word position j contributes [w_j; w_{j+1}, ..., w_n, 1...] plus
    [0; w_{j-1}, ..., w_1, 1...].  The k-th tail position left of the word
    contributes [1; 1^{k-1}, w, 1...] + [0; 1...], and the k-th on the right
    contributes [1; 1...] + [0; 1^{k-1}, w reversed, 1...].  Tail positions
    past depth 16 differ from the all-ones value sqrt(5) by less than the
    width of the depth-16 ones cylinder.
    """
    phi = _PHI
    inv_phi = phi.reciprocal()
    best = None
    for j in range(1, len(w) + 1):
        alpha = evaluate_with_tail(w[j - 1:], phi).reciprocal()
        beta = evaluate_with_tail(transpose(w[: j - 1]), phi)
        val = alpha + beta
        if best is None or val > best:
            best = val
        if val > limit:
            return None
    wt = transpose(w)
    for k in range(1, _TAIL_CHECK_DEPTH + 1):
        left_val = evaluate_with_tail(Word((1,) * k) + w, phi).reciprocal() + inv_phi
        right_val = phi + evaluate_with_tail(Word((1,) * (k - 1)) + wt, phi)
        for val in (left_val, right_val):
            if val > limit:
                return None
            if val > best:
                best = val
    residual = _SQRT5 + cylinder(Word((1,) * _TAIL_CHECK_DEPTH)).size
    if residual > limit:
        return None
    return best


def _enumerate_subtree(args):
    """DFS below one top-level digit; returns (kept words, visited node count).

    Forward window matrices for every suffix and the reversed-prefix matrix
    are maintained incrementally, so the per-node prune scan needs no word
    re-parsing.  Raises ResourceCapError when this subtree alone exceeds the
    node cap; the caller re-checks the summed total so the cap verdict does
    not depend on the worker split.
    """
    tv, r, mode, first, T, slack, cap = args
    small, big = tail_extremes(T)
    globally_empty = tv < _SQRT5
    kept = []
    nodes = 0

    def descend(digits, suffix_mats, prefix_ts):
        nonlocal nodes
        nodes += 1
        if nodes > cap:
            raise ResourceCapError(f"enumeration exceeded {cap} nodes")
        if globally_empty:
            return
        n = len(digits)
        for j in range(n, 0, -1):
            lower = _alpha_low(suffix_mats[j - 1], small, big) + _beta_low(prefix_ts[j - 1], small, big)
            if lower > tv:
                return
        word = Word(digits)
        if r_floor(word) >= r:
            # the scan above is exactly prune_over, so over-mode leaves are kept as-is
            if mode == "over" or certify_under(word, tv, slack).status == CERTAINLY_ADMISSIBLE:
                kept.append(word)
            return
        for d in range(1, T + 1):
            dm = matrix_for(Word((d,)))
            descend(
                digits + [d],
                [m.extend(d) for m in suffix_mats] + [ConvergentMatrix.seed().extend(d)],
                prefix_ts + [dm.compose(prefix_ts[-1])],
            )

    dm = matrix_for(Word((first,)))
    descend([first], [dm], [ConvergentMatrix.seed(), dm.compose(ConvergentMatrix.seed())])
    return kept, nodes


def enumerate_admissible(
    t,
    r: int,
    mode: str = "over",
    slack: Fraction = _DEFAULT_SLACK,
    max_nodes: int = _DEFAULT_NODE_CAP,
    workers: int = 1,
) -> AdmissibleFamily:
    """Scale-r layer of the outer (mode=over) or inner (mode=under) family at level t.

    Members satisfy r(word) >= r with r(parent) < r; descent stops at
    certainly-pruned prefixes.  Output order is lexicographic and identical
    for every worker count: subtrees are split by leading digit and merged in
    digit order, and the node cap applies to the summed total.
    """
    if mode not in ("over", "under"):
        raise DomainError(f"mode must be 'over' or 'under', not {mode!r}")
    if r < 1:
        raise DomainError("level r must be at least 1")
    tv = as_surd(t)
    T = _tail_alphabet(tv)
    jobs = [(tv, r, mode, first, T, slack, max_nodes) for first in range(1, T + 1)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_enumerate_subtree, jobs))
    else:
        results = [_enumerate_subtree(j) for j in jobs]
    words = []
    nodes = 0
    for kept, count in results:
        words.extend(kept)
        nodes += count
    if nodes > max_nodes:
        raise ResourceCapError(f"enumeration exceeded {max_nodes} nodes in total")
    return AdmissibleFamily(t=tv, r=r, mode=mode, words=tuple(words), nodes=nodes)


enumerate = enumerate_admissible


def count_table(t, r_max: int, mode: str = "over", **kwargs) -> list:
    """Counts N(t, r) of the requested family for r = 1..r_max."""
    return [(r, enumerate_admissible(t, r, mode, **kwargs).count) for r in range(1, r_max + 1)]
