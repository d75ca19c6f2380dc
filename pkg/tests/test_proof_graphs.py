import random

from shirshov import proof_graphs as pg
from shirshov.dilworth import AntichainTooLarge, color_representatives, min_chain_cover, representative_poset
from shirshov.divisibility import is_strongly_n_divisible
from shirshov.extremal import generate_extremal, type_coloring
from shirshov.powers import small_selective_height
from shirshov.suites import _omega_of, greedy_representative_set, power_block_word
from shirshov.words import primitive_words, w


def _gamma(word, n=3, k=6):
    _, omega = small_selective_height(word, 2, k)
    coloring = color_representatives(omega, n)
    return omega, coloring, pg.build_gamma(omega, coloring)


def test_single_representative_gives_one_edge():
    omega, coloring, g = _gamma(w("ab" * 7))
    assert len(g.edges) == 1
    (u, v, j), = g.edges
    assert j == 1 and u[0] != v[0] and {u[1], v[1]} == {1, 2}


def test_one_edge_per_representative():
    omega, coloring, g = _gamma(w("ab" * 7 + "c" + "ac" * 7))
    assert len(g.edges) == len(omega) == 2
    assert sorted(g.by_weight()) == [1, 2]


def test_empty_graph_audit_passes():
    audit = pg.audit_gamma(pg.ProofGraph("gamma", False, [], 0), 2, 3)
    assert audit.ok and audit.checks["edges"] == 0


def test_overfull_color_pair_is_reported():
    l = 2
    edges = [((1, 1), (2, 2), j) for j in range(1, 2 * l + 1)]
    audit = pg.audit_gamma(pg.ProofGraph("gamma", False, edges, len(edges)), l, 3)
    assert not audit.ok
    assert any(v["check"] == "edges per color pair" and v["count"] == 2 * l for v in audit.violations)


def test_extremal_word_passes_gamma_audit():
    word, plan = generate_extremal(4, 10)
    omega, coloring = type_coloring(plan)
    g = pg.build_gamma(omega, coloring)
    audit = pg.audit_gamma(g, 10, 4)
    assert audit.ok
    assert len(g.edges) == 12 <= 21


def test_gamma_audit_on_non_strongly_divisible_corpus():
    rng = random.Random(2)
    audited = 0
    for _ in range(120):
        l = rng.choice([2, 3])
        word = power_block_word(rng, l, 120)
        if is_strongly_n_divisible(word, 3, primitive_words(2, l), 6) is not None:
            continue
        _, omega = small_selective_height(word, 2, 6)
        try:
            coloring = color_representatives(omega, 3)
        except AntichainTooLarge as exc:
            assert exc.strong_witness is None
            coloring = min_chain_cover(representative_poset(omega))
        audit = pg.audit_gamma(pg.build_gamma(omega, coloring), l, 3)
        assert not [v for v in audit.violations if v["check"] == "edges per color pair"]
        audited += 1
    assert audited > 30


def test_one_triangle():
    _, omega = small_selective_height(w("abc" * 7), 3, 6)
    coloring = color_representatives(omega, 4)
    g = pg.build_triangle_graph(omega, coloring)
    assert len(g.edges) == 3 and {j for *_, j in g.edges} == {1}
    assert pg.check_triangle_lemma(g) is None


def test_triangle_lemma_violation_is_reported():
    a, b, c = (1, 1), (2, 2), (3, 3)
    tri = lambda j: [(a, b, j), (b, c, j), (c, a, j)]
    g = pg.ProofGraph("triangle", True, tri(1) + tri(2), 2)
    hit = pg.check_triangle_lemma(g)
    assert hit is not None and hit["weight"] == 2


def test_reduce_keeps_smallest_weight():
    a, b = (1, 1), (2, 2)
    g = pg.ProofGraph("triangle", True, [(a, b, 5), (a, b, 2)], 5)
    r = pg.reduce_multiedges(g)
    assert r.edges == [(a, b, 2)]
    assert 5 in r.missing_weights
    plain = pg.ProofGraph("triangle", True, [(a, b, 1), (b, a, 2)], 2)
    assert pg.reduce_multiedges(plain).edges == plain.edges


def test_triangle_corpus_keeps_every_weight():
    rng = random.Random(4)
    for _ in range(30):
        omega = greedy_representative_set(rng, 4, 3)  # period 3 = n - 1
        coloring = color_representatives(omega, 4)
        g = pg.build_triangle_graph(omega, coloring)
        assert len(g.edges) == 3 * len(omega)
        assert pg.check_triangle_lemma(g) is None
        assert not pg.reduce_multiedges(g).missing_weights


def test_single_cycle_potential():
    omega = _omega_of([w("abc")], 8)
    coloring = color_representatives(omega, 4)
    g = pg.build_cycle_graph(omega, coloring)
    assert pg.pi_potential(g) == {1: 6}


def test_potential_increases_on_corpus():
    rng = random.Random(8)
    for n in (4, 5):
        for l in (3, 4):
            for _ in range(10):
                omega = greedy_representative_set(rng, n, l)
                g = pg.build_cycle_graph(omega, color_representatives(omega, n))
                audit = pg.audit_cycle_graph(g, l, n)
                assert not [v for v in audit.violations
                            if v["check"] in ("pi strictly increasing", "one vertex per color", "cycle lemma")]


def test_dot_labels():
    _, _, g = _gamma(w("ab" * 7))
    dot = pg.to_dot(g)
    assert dot.startswith("graph G {") and '[label="1"]' in dot
