from fractions import Fraction

import pytest

from shirshov import bounds as b


def test_beth_values():
    assert b.beth2(3, 4) == 15
    assert b.beth2(1, 3) == 1
    assert b.beth3(3, 4) == 30
    assert b.beth_nminus1(4, 5) == 8
    assert all(b.beth_nminus1(2, n) == 0 for n in range(3, 9))


def test_beth_domain():
    with pytest.raises(ValueError):
        b.beth2(5, 2)
    with pytest.raises(ValueError):
        b.beth_nminus1(1, 4)


def test_lower_and_big_bounds():
    assert b.psi_lower(4, 10) == 2
    assert b.upsilon(3, 2) == 8 * 3 ** 3 * 3 ** 6 * 2 == 314928
    assert b.upsilon_proof(3, 2) * 2 == b.upsilon(3, 2)
    assert b.phi(3, 2) == 8 * 3 ** 4 * 3 ** 6
    assert b.height_lower(2, 4) == 5
    with pytest.raises(ValueError):
        b.psi_lower(4, 8)


def test_height_lower_floors_odd_m():
    assert b.height_lower_exact(2, 3) == Fraction(13, 4)
    assert b.height_lower(2, 3) == 3
    rows = {r.name: r for r in b.bound_table(2, 3)}
    assert not rows["height_lower"].exact and "floored" in rows["height_lower"].note


def test_literature_bounds():
    assert b.ess_l4_bound(2, 2, 3) == 4 * 27 * 81 == 8748
    assert b.co1_bound(2, 3, 4) == 90
    assert b.bk_height(2, 3) == 2 ** 87 * 2 * 3 ** 60
    assert b.bk_height_report(2, 3).exact
    # 12 log3(2) is irrational: the exponent is rounded up, never down
    rep = b.bk_height_report(1, 2)
    assert not rep.exact and rep.value == 2 ** 87 * 2 ** (8 + 48)
    assert 3 ** 7 < 2 ** 12 < 3 ** 8
    assert b.bk_psi(1, 3, 1) == 2 ** 18 * 3 ** (3 + 13) * 9


def test_co1_choices():
    assert b.co1_bound(3, 3, 4) == 2 * 3 * 30
    assert b.co1_bound(3, 4, 5) == 2 * 4 * b.beth3(4, 5)
    assert b.co1_bound(4, 4, 5) == 2 * 4 * 8
    with pytest.raises(ValueError):
        b.co1_bound(5, 3, 4)


def test_grid_consistency():
    for n in range(3, 9):
        for l in range(1, 60):
            assert b.co1_bound(2, l, n) == 2 * (n - 1) * b.beth2(l, n)
            if l > 2 ** (n - 1):
                assert b.psi_lower(n, l) <= b.beth2(l, n)


def test_digits_field():
    for r in b.bound_table(5, 6):
        assert r.digits == len(str(r.value))
