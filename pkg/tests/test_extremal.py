import pytest

from shirshov.bounds import psi_lower
from shirshov.divisibility import is_strongly_n_divisible
from shirshov.extremal import (certify_extremal, generate_extremal, step_offsets, type_coloring,
                               vertex_types)
from shirshov.oracles import brute_strongly_n_divisible
from shirshov.words import cycle_key, is_primitive, primitive_words


def test_offsets_form_a_ruler():
    offs = step_offsets(4)
    assert offs == [0, 4, 6, 7]
    diffs = [b - a for i, a in enumerate(offs) for b in offs[i + 1:]]
    assert len(set(diffs)) == len(diffs)


def test_plan_for_n4_l10():
    word, plan = generate_extremal(4, 10)
    assert plan.steps == [2, 3]
    step2 = [(e.group, e.u, e.v) for e in plan.edges if e.step == 2]
    assert step2 == [(1, 2, 6), (2, 2, 8), (2, 6, 8), (3, 2, 9), (3, 6, 9), (3, 8, 9)]
    assert len(plan.edges) == 12
    assert len(word) == 12 * 2 * 9


def test_blocks_are_primitive_and_distinct():
    for l in (9, 10, 12):
        word, plan = generate_extremal(4, l)
        assert plan.edges_unique()
        assert all(is_primitive(z) for z in plan.blocks())
        assert len({cycle_key(z) for z in plan.blocks()}) == len(plan.edges)
        assert plan.exponent > 8


def test_domain_errors():
    with pytest.raises(ValueError):
        generate_extremal(4, 8)
    with pytest.raises(ValueError):
        generate_extremal(3, 10)
    with pytest.raises(ValueError):
        generate_extremal(4, 10, exponent=8)


def test_types_take_n_values():
    _, plan = generate_extremal(4, 10)
    types = vertex_types(plan)
    assert sorted(v for (step, _), v in types.items() if step == 2) == [0, 1, 2, 3]


def test_certificate_n4_l10():
    word, plan = generate_extremal(4, 10)
    cert = certify_extremal(word, plan, 4, check_strong=False)
    assert cert.measured_height == cert.edge_count == 12
    assert cert.measured_height >= psi_lower(4, 10) == 2
    assert cert.edges_formula_listed == 12 and cert.edges_formula_stated == 2
    assert cert.type_coloring_valid and cert.type_colors == 4
    assert cert.witness.is_valid(word)


def test_l9_is_not_strongly_4_divisible():
    word, plan = generate_extremal(4, 9)
    cert = certify_extremal(word, plan, 4)
    assert cert.strongly_divisible is False
    assert cert.max_antichain == 3


def test_strong_decider_matches_brute_force_on_a_small_prefix():
    word, plan = generate_extremal(4, 10, exponent=9)
    periods = list(primitive_words(2, 10))
    piece = word[:4 * 18]
    for n in (2, 3):
        fast = is_strongly_n_divisible(piece, n, periods, 8)
        slow = brute_strongly_n_divisible(piece, n, periods, 8)
        assert (fast is None) == (slow is None)


def test_type_coloring_is_a_chain_partition():
    for l in (9, 11):
        _, plan = generate_extremal(4, l)
        _, coloring = type_coloring(plan)
        assert coloring.is_valid()
