import numpy as np
import pytest

import kquasi as kq


def test00_rejects_bad_shapes():
    with pytest.raises(kq.ShapeError):
        kq.from_rows([[0, 1], [1]])
    with pytest.raises(kq.ShapeError):
        kq.CayleyTable(np.zeros((2, 3), dtype=int))
    with pytest.raises(kq.RangeError):
        kq.CayleyTable([[0, 2], [1, 0]])
    # Both are also plain ValueErrors
    with pytest.raises(ValueError):
        kq.from_rows([])


def test01_entries_are_read_only(quad5):
    assert not quad5.entries.flags.writeable
    with pytest.raises(ValueError):
        quad5.entries[0, 0] = 1


def test02_product_and_rows(quad13):
    assert quad13.n == 13
    assert quad13(1, 0) == 3
    assert quad13(0, 1) == 11
    assert quad13.row(0).tolist() == [(11 * j) % 13 for j in range(13)]
    assert quad13.is_idempotent()
    assert not quad13.is_commutative()
    assert kq.build(5, 3, 3).is_commutative()


def test03_translatable_sequence_matches_linear_form(quad13):
    t = kq.from_translatable_sequence(quad13.row(0), 8)
    assert t == quad13


def test04_equality_and_hashing(quad5):
    assert len({quad5, kq.build(5, 2, 4), kq.build(5, 4, 2)}) == 2
    assert quad5 != kq.build(5, 4, 2)
    assert (quad5 == 'not a table') is False


def test05_json_and_csv(quad13):
    assert kq.CayleyTable.from_json(quad13.to_json()) == quad13
    assert kq.CayleyTable.from_csv(quad13.to_csv()) == quad13
    with pytest.raises(kq.ShapeError):
        kq.CayleyTable.from_json('{"n": 4, "rows": [[0, 1], [1, 0]]}')
    with pytest.raises(kq.ShapeError):
        kq.CayleyTable.from_json('[[0, 1], [1, 0]]')


def test06_dual(quad13):
    d = kq.dual(quad13)
    assert np.array_equal(d.entries, quad13.entries.T)
    assert kq.dual(d) == quad13
    assert d == kq.build(13, 11, 3)


def test07_cyclic_reorder_keeps_translatability(order_eight, quad13):
    for t in (order_eight, quad13):
        reordered = t
        for _ in range(t.n):
            reordered = kq.cyclic_reorder(reordered)
            assert kq.translatability(reordered).ks == kq.translatability(t).ks
        assert reordered == t


def test08_to_string(quad5):
    text = quad5.to_string(one_based=True)
    assert text.startswith('CayleyTable[')
    assert 'n = 5' in text
    assert '5' in text.split('entries')[1]
    assert repr(quad5) == quad5.to_string()
