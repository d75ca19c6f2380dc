import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from shirshov.bounds import ess_l4_bound
from shirshov.dilworth import max_antichain as poset_antichain
from shirshov.encodings import (CycleClassFamily, beth_empirical, is_antichain, is_n_good, max_antichain,
                                pad_encode, pair_decode, pair_encode, pair_encode_with_alignment)
from shirshov.oracles import brute_max_antichain_size
from shirshov.suites import random_family
from shirshov.words import rotate, w


def brute_distinct(fam):
    best = 0
    members = [m for m, _ in fam.members()]
    for r in range(1, len(fam) + 1):
        for combo in itertools.combinations(members, r):
            if is_antichain(fam, combo, True):
                best = r
    return best


def test_family_invariants():
    with pytest.raises(ValueError):
        CycleClassFamily.of([w("abab")])
    with pytest.raises(ValueError):
        CycleClassFamily.of([w("ab"), w("ba")])
    with pytest.raises(ValueError):
        CycleClassFamily.of([w("ab"), w("abc")])


def test_word_accessor_is_one_based():
    fam = CycleClassFamily.of([w("abc")])
    assert fam.word(1, 1) == w("abc") and fam.word(1, 3) == w("cab")


def test_json_round_trip():
    fam = CycleClassFamily.of([w("aab"), w("abb")])
    assert CycleClassFamily.from_json(fam.to_json()) == fam
    assert CycleClassFamily.from_record({"length": 3, "alphabet": 2, "cycles": ["aab", "abb"]}) == fam


def test_one_cycle_family_is_good():
    fam = CycleClassFamily.of([w("abc")])
    for n in range(2, 6):
        assert is_n_good(fam, n).good
    # the literal reading counts same-cycle rotations
    assert len(max_antichain(fam, distinct_cycles=False)) == 3


def test_ab_ac_is_3_good():
    fam = CycleClassFamily.of([w("ab"), w("ac")])
    for distinct in (True, False):
        res = is_n_good(fam, 3, distinct)
        assert res.good and len(res.antichain) == 2


def test_engineered_bad_family():
    fam = CycleClassFamily.of([w("ca"), w("bc"), w("ab")])
    res = is_n_good(fam, 3)
    assert not res.good and len(res.antichain) >= 3
    assert is_antichain(fam, res.antichain[:3], True)


def test_chain_cover_certificate():
    fam = CycleClassFamily.of([w("ab"), w("ac")])
    res = is_n_good(fam, 3, distinct_cycles=False)
    covered = sorted(m for ch in res.chains for m in ch)
    assert covered == [(1, 1), (1, 2), (2, 1), (2, 2)]


def test_antichains_match_oracles():
    rng = random.Random(9)
    for _ in range(120):
        fam = random_family(rng, rng.choice([2, 3]), rng.choice([2, 3]), 4)
        literal = max_antichain(fam, False)
        assert is_antichain(fam, literal, False)
        poset, _ = fam.poset()
        assert len(literal) == len(poset_antichain(poset)) == brute_max_antichain_size(range(len(poset)), poset.related)
        distinct = max_antichain(fam, True)
        assert is_antichain(fam, distinct, True)
        assert len(distinct) == brute_distinct(fam)


def test_pair_encode_single_cycle():
    enc = pair_encode(CycleClassFamily.of([w("ab")], 2))
    assert enc.length == 1 and enc.alphabet == 4 and enc.cycles == ((2,),)


def test_pair_encode_rejects_odd_length():
    with pytest.raises(ValueError):
        pair_encode(CycleClassFamily.of([w("abc")]))
    with pytest.raises(ValueError):
        pair_encode(CycleClassFamily.of([w("ab")]), offset=2)


@settings(max_examples=60)
@given(st.integers(0, 10 ** 6), st.sampled_from([2, 4]), st.sampled_from([0, 1]))
def test_pair_encode_round_trip(seed, t, offset):
    fam = random_family(random.Random(seed), t, 2)
    enc = pair_encode(fam, offset)
    assert pair_decode(enc, 2).cycles == tuple(rotate(c, offset) for c in fam.cycles)


def test_pair_encode_keeps_goodness():
    rng = random.Random(12)
    for _ in range(100):
        fam = random_family(rng, 4, 2)
        for n in (2, 3, 4):
            for distinct in (True, False):
                if is_n_good(fam, n, distinct).good:
                    assert is_n_good(pair_encode(fam), n, distinct).good


def test_alignment_keeps_an_antichain():
    fam = CycleClassFamily.of([w("caab"), w("bcab"), w("abac"), w("aacb")], 3)
    res = is_n_good(fam, 2)
    assert len(res.antichain) == 4
    enc, offset, kept = pair_encode_with_alignment(fam, res.antichain)
    assert offset == 0 and len(kept) == 4
    assert is_antichain(enc, kept, True)
    assert not is_n_good(enc, 4).good


def test_alignment_picks_majority_parity():
    rng = random.Random(21)
    for _ in range(80):
        fam = random_family(rng, 4, 3, 6)
        anti = max_antichain(fam)
        enc, offset, kept = pair_encode_with_alignment(fam, anti)
        assert 2 * len(kept) >= len(anti)
        assert is_antichain(enc, kept, True)


def test_alignment_trivial_cases():
    fam = CycleClassFamily.of([w("ab")])
    enc, offset, kept = pair_encode_with_alignment(fam, [])
    assert enc.length == 1 and kept == []
    assert is_n_good(enc, 2).good


def test_pad_encode():
    padded = pad_encode(CycleClassFamily.of([w("abc")]), 2)
    assert padded.cycles == ((2, 3, 4, 1),) and padded.alphabet == 4
    fam = CycleClassFamily.of([w("aabb")])
    assert pad_encode(fam).length == 4
    with pytest.raises(ValueError):
        pad_encode(CycleClassFamily.of([w("aabab")]), 2)


def test_pad_encode_maps_goodness():
    rng = random.Random(13)
    for _ in range(100):
        fam = random_family(rng, 3, 2)
        for n in (2, 3, 4):
            for distinct in (True, False):
                if is_n_good(fam, n, distinct).good:
                    assert is_n_good(pad_encode(fam, 2), 4 * (n - 1) + 1, distinct).good


def test_beth_search_examples():
    assert beth_empirical(2, 2, 3).value == 1
    res = beth_empirical(1, 2, 2)
    assert res.exhaustive and res.value == 2
    assert beth_empirical(3, 3, 3, cap=0).value == 0


@pytest.mark.parametrize("t, l, n", [(2, 3, 2), (2, 3, 3), (3, 2, 3), (3, 3, 2)])
def test_beth_search_below_upper_bound(t, l, n):
    res = beth_empirical(t, l, n, budget=20_000)
    assert res.value < ess_l4_bound(t, l, n)
    assert res.family is None or is_n_good(res.family, n).good
