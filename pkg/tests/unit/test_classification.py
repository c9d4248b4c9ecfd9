import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

import kquasi as kq
from kquasi.utils import valid_a

Q = kq.QClass


def test00_classify():
    assert kq.classify(13, 3) == {Q.Quadratical, Q.C3}
    assert kq.classify(7, 2) == {Q.ARO, Q.C3}
    assert kq.classify(7, 5) == {Q.Hexagonal, Q.ARO}
    assert kq.classify(5, 4) == {Q.Quadratical, Q.LeftModular, Q.Stein}
    assert kq.classify(9, 5) == set()


def test01_classify_rejects_non_quasigroups():
    with pytest.raises(kq.EvenOrder):
        kq.classify(8, 3)
    # EvenOrder is a NotAQuasigroup
    with pytest.raises(kq.NotAQuasigroup):
        kq.classify(10, 3)
    with pytest.raises(kq.NotAQuasigroup):
        kq.classify(9, 3)


def test02_k_for_class():
    assert kq.k_for_class(13, 3, Q.Quadratical) == 8
    assert kq.k_for_class(13, 3, Q.C3) == 8
    assert kq.k_for_class(7, 5, 'hexagonal') == 3
    assert kq.k_for_class(5, 3, Q.GS) == 4
    with pytest.raises(kq.CriterionViolated):
        kq.k_for_class(13, 3, Q.Hexagonal)


def test03_report():
    verdict = kq.report(13, 3)
    assert (verdict.b, verdict.k) == (11, 8)
    assert verdict.classes == {Q.Quadratical, Q.C3}
    assert verdict.dual_classes == {Q.Quadratical}
    assert verdict.to_dict()['classes'] == ['quadratical', 'c3']
    assert verdict.anomalies == ()

    commutative = kq.report(5, 3, 3)
    assert commutative.commutative and commutative.k == 4

    # Not idempotent: no classes, k from -a/b
    other = kq.report(5, 2, 3)
    assert not other.idempotent and other.quasigroup
    assert other.classes == frozenset() and other.k == 1

    even = kq.report(8, 4, 5)
    assert even.idempotent and not even.quasigroup and even.classes == frozenset()


def test04_is_quadratical_linear():
    assert kq.is_quadratical_linear(13, 3, 11, 8)
    assert not kq.is_quadratical_linear(13, 3, 11, 7)
    assert not kq.is_quadratical_linear(7, 2, 6, 2)


def test05_class_masks_only_cover_quasigroups():
    masks = kq.class_masks(9)
    for mask in masks.values():
        assert not np.any(mask & ~valid_a(9))
    assert np.flatnonzero(kq.class_masks(13)[Q.Quadratical]).tolist() == [3, 11]


def test06_commutative_instances():
    found = kq.commutative_instances(15)
    assert found[Q.Hexagonal] == [(3, 2)]
    assert found[Q.GS] == [(5, 3)]
    assert found[Q.C3] == [(7, 4)]
    for cls in (Q.Quadratical, Q.RightModular, Q.LeftModular, Q.Stein, Q.ARO):
        assert found[cls] == []


@settings(max_examples=25, deadline=None)
@given(n=st.sampled_from([3, 5, 7, 9, 11, 13, 15]), a=st.integers(0, 14))
def test07_criteria_agree_with_table_laws(n, a):
    a = a % n
    assume(valid_a(n)[a])
    table = kq.build(n, a, (1 - a) % n)
    assert kq.classify(n, a) == kq.table_classes(table)
    for cls in kq.classify(n, a):
        assert kq.translatability(table).unique == kq.k_for_class(n, a, cls)


def test08_verify_classification():
    report = kq.verify_classification(max_n=31)
    assert report.ok, report.failures
    assert report.checked == sum(int(valid_a(n).sum()) for n in range(3, 32, 2))
    assert report.to_dict()['name'] == 'classification'


def test09_verify_classification_reports_mismatches(monkeypatch):
    from kquasi.linear import surveys

    monkeypatch.setattr(surveys, 'table_classes', lambda t: set())
    report = kq.verify_classification(max_n=5)
    assert not report.ok
    # (3, 2) is hexagonal, (5, 2) and (5, 4) quadratical, (5, 3) GS
    assert [(f['n'], f['a']) for f in report.failures] == [(3, 2), (5, 2), (5, 3), (5, 4)]
    with pytest.raises(kq.CounterexampleFound):
        report.raise_if_failed()
