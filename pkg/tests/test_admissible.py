"""One-sided admissibility certificates and layer enumeration."""

import random
from fractions import Fraction

import pytest

from markovdim import (DomainError, QuadraticSurd, Word, certify_under, count_table,
                       enumerate_admissible, markov_value_periodic, prune_over,
                       r_floor, surd_compare)
from markovdim.admissible import CERTAINLY_ADMISSIBLE, CERTAINLY_PRUNED, UNKNOWN

SQRT12 = QuadraticSurd(0, 2, 1, 3)
SQRT5 = QuadraticSurd(0, 1, 1, 5)


def test_prune_certain_above_the_alphabet_bound():
    # a digit 3 forces a position value above 3 + [0;1...] extremes > sqrt 12
    assert prune_over(Word((3,)), SQRT12).status == CERTAINLY_PRUNED
    assert prune_over(Word((1, 3)), SQRT12).status == CERTAINLY_PRUNED
    assert prune_over(Word((2, 2)), SQRT12).status == UNKNOWN


def test_prune_below_sqrt5_kills_everything():
    # every bi-infinite sequence reaches sqrt 5 somewhere
    for w in [(1,), (2,), (1, 1, 2)]:
        assert prune_over(Word(w), Fraction(2)).status == CERTAINLY_PRUNED


def test_prune_never_discards_words_with_small_periodic_closure():
    rng = random.Random(20260823)
    for _ in range(150):
        w = Word(rng.randint(1, 2) for _ in range(rng.randint(1, 6)))
        t = markov_value_periodic(w)
        verdict = prune_over(w, t + Fraction(1, 100))
        # the periodic completion witnesses a value below t, so no certain prune
        assert verdict.status != CERTAINLY_PRUNED


def test_certify_under_accepts_classical_periods():
    eps = Fraction(1, 10**9)
    assert certify_under(Word((1, 1, 1, 1)), SQRT5 + eps).status == CERTAINLY_ADMISSIBLE
    assert certify_under(Word((2, 2, 2, 2)), QuadraticSurd(0, 2, 1, 2) + eps).status \
        == CERTAINLY_ADMISSIBLE
    assert certify_under(Word((1, 2, 1, 2)), SQRT12 + eps).status == CERTAINLY_ADMISSIBLE


def test_certify_under_refuses_values_above_the_level():
    # (2)^inf has Markov value 2 sqrt 2 > 2.7, and no completion does better
    v = certify_under(Word((2, 2, 2, 2)), Fraction(27, 10))
    assert v.status == UNKNOWN


def test_certified_words_have_admissible_periodic_closure():
    rng = random.Random(31)
    t = SQRT12
    for _ in range(100):
        w = Word(rng.randint(1, 2) for _ in range(rng.randint(1, 7)))
        v = certify_under(w, t)
        if v.status == CERTAINLY_ADMISSIBLE:
            kind, value = v.witness
            assert kind in ("ones-tails", "periodic")
            assert surd_compare(value, t) <= 0


def test_layer_counts_at_sqrt12():
    table = count_table(SQRT12, 6, "over")
    assert table == [(1, 3), (2, 5), (3, 8), (4, 13), (5, 21), (6, 35)]
    # at sqrt 12 the inner family certificate keeps every surviving word
    assert count_table(SQRT12, 4, "under") == [(1, 3), (2, 5), (3, 8), (4, 13)]


def test_layer_members_have_the_right_level():
    fam = enumerate_admissible(SQRT12, 5, "over")
    for w in fam.words:
        assert r_floor(w) >= 5
        assert r_floor(w[:-1]) < 5


def test_enumeration_is_sorted_and_worker_independent():
    one = enumerate_admissible(SQRT12, 6, "over", workers=1)
    two = enumerate_admissible(SQRT12, 6, "over", workers=2)
    assert one.words == two.words
    assert list(one.words) == sorted(one.words)
    assert one.words[0] == Word((1, 1, 1, 1, 1, 1, 1))
    assert one.words[-1] == Word((2, 2, 2, 2))


def test_under_family_is_contained_in_over_family():
    t = Fraction(31, 10)
    over = enumerate_admissible(t, 5, "over")
    under = enumerate_admissible(t, 5, "under")
    assert set(under.words) <= set(over.words)


def test_enumeration_rejects_bad_arguments():
    with pytest.raises(DomainError):
        enumerate_admissible(SQRT12, 0, "over")
    with pytest.raises(DomainError):
        enumerate_admissible(SQRT12, 3, "sideways")


def test_empty_layer_below_sqrt5():
    fam = enumerate_admissible(Fraction(2), 3, "over")
    assert fam.count == 0
