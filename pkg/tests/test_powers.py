import random

import pytest
from hypothesis import given, settings, strategies as st

from shirshov.divisibility import is_n_divisible
from shirshov.powers import (PowerOccurrence, RepresentativeSet, brute_small_selective_height,
                             forcing_check, large_selective_height, periodic_runs, scan_powers,
                             shirshov_decompose, small_selective_height)
from shirshov.suites import forcing_word
from shirshov.words import is_primitive, w

AB7_C_BA7 = w("ab" * 7 + "c" + "ba" * 7)
AB7_C_AC7 = w("ab" * 7 + "c" + "ac" * 7)


def test_scan_two_conjugate_runs():
    occ = scan_powers(AB7_C_BA7, 2, 6)
    assert [(o.position, o.period, o.exponent) for o in occ] == [(0, w("ab"), 7), (15, w("ba"), 7)]


def test_scan_skips_non_primitive_and_empty():
    assert scan_powers(w("aaaa"), 2, 1) == []
    assert scan_powers((), 2, 1) == []


@pytest.mark.parametrize("word, h", [(AB7_C_AC7, 2), (AB7_C_BA7, 1), ((), 0)])
def test_small_selective_height(word, h):
    got, omega = small_selective_height(word, 2, 6)
    assert got == h == len(omega)
    assert omega.is_valid(word)


@pytest.mark.parametrize("word, h", [(w("ab" * 15), 2), (AB7_C_AC7, 1), ((), 0)])
def test_large_selective_height(word, h):
    assert large_selective_height(word, 2, 6) == h


def test_decompose_splits_blocks_and_gap():
    dec = shirshov_decompose(AB7_C_AC7, 3, 6)
    assert len(dec.blocks) == 2 and dec.gaps == [w("c")]
    assert dec.concat() == AB7_C_AC7


def test_decompose_trivial_cases():
    word = w("abc" * 3)
    dec = shirshov_decompose(word, 3, 6)
    assert dec.blocks == [] and dec.gaps == [word]
    dec = shirshov_decompose(w("ab" * 7), 3, 6)
    assert len(dec.blocks) == 1 and dec.gaps == []


def test_forcing_on_lemma_construction():
    x = w("ab")
    word = ()
    for tail in ("c", "ba", "a"):
        word += x * 3 + w(tail + "c")
    div = forcing_check(word, 2)
    assert div is not None and div.is_valid()


def test_forcing_needs_repeats():
    assert forcing_check(w("ab" * 3 + "c"), 2) is None


def test_forcing_on_square_power():
    word = w("abc" * 6)
    div = forcing_check(word, 3)
    assert div is not None and div.is_valid()


def test_representative_set_validation():
    word = AB7_C_AC7
    good = RepresentativeSet([PowerOccurrence(0, w("ab"), 7), PowerOccurrence(15, w("ac"), 7)], 6)
    assert good.is_valid(word)
    overlapping = RepresentativeSet([PowerOccurrence(0, w("ab"), 7), PowerOccurrence(13, w("bc"), 1)], 0)
    assert not overlapping.is_valid(word)
    same_class = RepresentativeSet([PowerOccurrence(0, w("ab"), 7), PowerOccurrence(1, w("ba"), 6)], 5)
    assert not same_class.is_valid(word)


def _power_word(rng, l, blocks):
    word = ()
    for _ in range(blocks):
        t = rng.choice([1, 2, 2, 3])
        z = tuple(rng.randint(1, l) for _ in range(t))
        word += z * rng.randint(1, 5) + tuple(rng.randint(1, l) for _ in range(rng.randint(0, 2)))
    return word[:40]


def test_small_height_matches_exhaustive_search():
    rng = random.Random(11)
    for _ in range(150):
        word = _power_word(rng, 3, 6)
        for t, k in ((1, 2), (2, 1), (2, 2), (3, 1)):
            h, omega = small_selective_height(word, t, k)
            assert omega.is_valid(word)
            assert h == brute_small_selective_height(word, t, k)


@settings(max_examples=200)
@given(st.lists(st.integers(1, 3), max_size=30).map(tuple), st.integers(1, 3), st.integers(1, 3))
def test_scanned_occurrences_are_maximal(word, t, k):
    runs = periodic_runs(word, t)
    for o in scan_powers(word, t, k):
        assert word[o.position: o.end] == o.factor()
        assert is_primitive(o.period) and o.exponent > k
        # cannot slide left, cannot take one more whole period
        assert o.position == 0 or word[o.position - 1] != word[o.position - 1 + t]
        assert word[o.end: o.end + t] != o.period
        assert any(s <= o.position and o.end <= e for s, e in runs)


def test_forcing_always_validates():
    rng = random.Random(5)
    for i in range(60):
        n = 2 + i % 2
        word = forcing_word(rng, n)
        div = forcing_check(word, n)
        assert div is not None and div.is_valid()
        assert is_n_divisible(word, n) is not None
