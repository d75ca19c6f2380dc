import pytest
from hypothesis import given, strategies as st

from shirshov.rauzy import (CycleCapExceeded, build_rauzy, cycle_traversals, simple_cycles, to_dot,
                            trajectory_cycle_stats)
from shirshov.words import w, primitive_words


def test_abab_order_2():
    g = build_rauzy(w("abab"), 2)
    assert set(g.vertices) == {w("ab"), w("ba")}
    assert set(g.edges) == {(w("ab"), w("ba")), (w("ba"), w("ab"))}


def test_self_loop_and_single_vertex():
    assert build_rauzy(w("aaa"), 1).edges == ((w("a"), w("a")),)
    g = build_rauzy(w("abc"), 3)
    assert g.vertices == (w("abc"),) and g.edges == ()


def test_too_short_word():
    with pytest.raises(ValueError):
        build_rauzy(w("ab"), 3)


def test_periodic_word_counts():
    stats = trajectory_cycle_stats(w("ab" * 10), 2, 3, 3)
    assert stats.counts == [((w("ab"), w("ba")), 9)]
    assert len(stats.over_threshold) == 1


def test_two_periodic_stretches():
    stats = trajectory_cycle_stats(w("ab" * 10 + "c" + "ac" * 10), 2, 3, 5)
    assert len(stats.over_threshold) == 2


def test_square_free_factors_give_small_counts():
    word = w("aabbaba")
    stats = trajectory_cycle_stats(word, 3, 4, 1)
    assert all(k <= 1 for _, k in stats.counts)


def test_cycle_cap():
    g = build_rauzy(w("aabbabaabbbaaab"), 1)
    with pytest.raises(CycleCapExceeded):
        simple_cycles(g, 3, cap=1)


@given(st.lists(st.integers(1, 2), min_size=1, max_size=16).map(tuple), st.integers(1, 3))
def test_counts_and_walk(word, r):
    if len(word) < r:
        return
    g = build_rauzy(word, r)
    assert len(g.trajectory) == len(word) - r
    assert len(g.edges) == len({word[p: p + r + 1] for p in range(len(word) - r)})
    for (a, b), (c, d) in zip(g.trajectory, g.trajectory[1:]):
        assert b == c
    for u, v in g.edges:
        assert u[1:] == v[:-1]


@pytest.mark.parametrize("r", [2, 3])
def test_power_of_length_r_word_is_one_cycle(r):
    for z in primitive_words(r, 2):
        m = 6
        g = build_rauzy(z * m, r)
        cycles = simple_cycles(g, r + 1)
        assert len(cycles) == 1 and len(cycles[0]) == r
        assert cycle_traversals(g, cycles[0]) == m - 1


def test_dot_has_counts():
    dot = to_dot(build_rauzy(w("ab" * 4), 2))
    assert '"ab" -> "ba" [label="3"' in dot
