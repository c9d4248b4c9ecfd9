from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import kquasi as kq


def test00_linear_groupoid():
    g = kq.LinearGroupoid.idempotent(13, 3)
    assert (g.a, g.b) == (3, 11)
    assert g.is_idempotent() and g.is_quasigroup()
    assert g.table() == kq.build(13, 3, 11)
    assert not kq.LinearGroupoid(8, 4, 5).is_quasigroup()
    with pytest.raises(kq.RangeError):
        kq.LinearGroupoid(5, 7, 1)
    with pytest.raises(kq.RangeError):
        kq.build(0, 1, 1)


def test01_solve_from_k():
    assert kq.solve_from_k(13, 8) == (3, 11)
    assert kq.solve_from_k(5, 2) == (2, 4)
    assert kq.solve_from_k(7, 6) == (4, 4)
    assert kq.solve_from_k(9, 4) is None
    assert kq.solve_from_k(7, 1) is None
    with pytest.raises(kq.RangeError):
        kq.solve_from_k(5, 0)
    with pytest.raises(kq.RangeError):
        kq.solve_from_k(5, 5)


def test02_translatable_k():
    assert kq.translatable_k(13, 3, 11) == 8
    assert kq.translatable_k(5, 3, 3) == 4
    assert kq.translatable_k(9, 4, 6) is None
    with pytest.raises(kq.CriterionViolated):
        kq.translatable_k(5, 2, 3)


def test03_divisibility_rule():
    assert kq.translatable_k_divisibility(8, 4, 5) == [4]
    assert kq.translatable_k_divisibility(13, 3, 11) == [8]
    with pytest.raises(kq.CriterionViolated):
        kq.translatable_k_divisibility(8, 4, 4)


def test04_dual_k(quad13):
    assert kq.dual_k(8, 3) == 3
    assert kq.dual_k(13, 8) == 5
    assert kq.translatability(kq.dual(quad13)).unique == 5
    assert kq.dual_k(9, 3) is None


def test05_recover_linear(quad13, order_eight):
    assert kq.recover_linear(quad13) == (3, 11)
    assert kq.recover_linear(order_eight) is None
    assert kq.recover_linear(kq.CayleyTable([[0]])) == (0, 0)


@settings(max_examples=60, deadline=None)
@given(n=st.integers(2, 25), k=st.integers(1, 24))
def test06_closed_form_is_k_translatable(n, k):
    k = 1 + (k - 1) % (n - 1) if n > 2 else 1
    coeffs = kq.solve_from_k(n, k)
    if coeffs is None:
        assert gcd(k - 1, n) != 1
        return
    a, b = coeffs
    table = kq.build(n, a, b)
    assert table.is_idempotent()
    assert kq.translatability(table).ks == (k,)
    assert kq.is_quasigroup(table) == (gcd(k, n) == 1)
    assert kq.from_translatable_sequence(table.row(0), k) == table
