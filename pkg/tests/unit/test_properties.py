import numpy as np
import pytest

import kquasi as kq
from kquasi.utils import odd_orders, valid_a


def test00_cancellation():
    t = kq.build(8, 4, 5)
    assert kq.is_left_cancellative(t)
    assert not kq.is_right_cancellative(t)
    assert not kq.is_quasigroup(t)
    assert kq.is_quasigroup(kq.build(5, 2, 4))


def test01_translatability_scan(quad13, order_eight):
    report = kq.translatability(quad13)
    assert report.ks == (8,)
    assert report.unique == 8
    assert 8 in report and 7 not in report
    assert kq.is_k_translatable(quad13, 8)
    assert not kq.is_k_translatable(quad13, 7)

    assert list(kq.translatability(order_eight)) == [3]
    assert kq.translatability(kq.build(8, 4, 5)).ks == (4,)


def test02_translatability_of_trivial_tables():
    assert len(kq.translatability(kq.CayleyTable([[0]]))) == 0
    # Constant tables are translatable for every k
    constant = kq.CayleyTable([[0] * 3] * 3)
    report = kq.translatability(constant)
    assert report.ks == (1, 2)
    assert report.unique is None


def test03_quadratical_criteria_agree(quad13):
    criteria = kq.quadratical_criteria(quad13, 8)
    assert (criteria.a, criteria.b, criteria.c, criteria.d) == (True, True, True, True)
    assert criteria.agree

    equivalents = kq.quadratical_equivalents(quad13, 8)
    assert equivalents.agree and equivalents.a


def test04_quadratical_criteria_on_other_classes():
    # ARO and C3, 2-translatable
    t = kq.build(7, 2, 6)
    criteria = kq.quadratical_criteria(t, 2)
    assert (criteria.a, criteria.b, criteria.c, criteria.d) == (False, False, False, False)
    assert kq.quadratical_equivalents(t, 2).agree


def test05_quadratical_criteria_named_instances(quad5):
    hexagonal = kq.quadratical_criteria(kq.build(7, 5, 3), 3)
    assert (hexagonal.a, hexagonal.b, hexagonal.c, hexagonal.d) == (False,) * 4
    criteria = kq.quadratical_criteria(quad5, 2)
    assert (criteria.a, criteria.b, criteria.c, criteria.d) == (True,) * 4


def test06_quadratical_criteria_preconditions(quad13):
    with pytest.raises(kq.NotAQuasigroup):
        kq.quadratical_criteria(kq.build(8, 4, 5), 4)
    with pytest.raises(kq.NotTranslatable):
        kq.quadratical_criteria(quad13, 7)


def test07_table_classes(quad13, quad5):
    assert kq.table_classes(quad13) == {kq.QClass.Quadratical, kq.QClass.C3}
    assert kq.table_classes(quad5) == {kq.QClass.Quadratical, kq.QClass.RightModular}
    assert kq.table_classes(kq.build(3, 2, 2)) == {kq.QClass.Hexagonal}
    assert not kq.class_holds(kq.build(8, 4, 5), 'quadratical')


def test08_quadratical_criteria_on_every_instance():
    checked = 0
    for n in odd_orders(31):
        for a in np.flatnonzero(valid_a(n)):
            a = int(a)
            b = (1 - a) % n
            t = kq.build(n, a, b)
            k = kq.translatable_k(n, a, b)
            assert kq.is_k_translatable(t, k)
            criteria = kq.quadratical_criteria(t, k)
            equivalents = kq.quadratical_equivalents(t, k)
            assert criteria.agree, (n, a)
            assert equivalents.agree, (n, a)
            assert criteria.a == equivalents.a
            if kq.class_holds(t, kq.QClass.Quadratical):
                assert (k * k + 1) % n == 0
            checked += 1
    assert checked > 100
