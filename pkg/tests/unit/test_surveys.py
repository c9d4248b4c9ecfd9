import logging

import pytest

import kquasi as kq

Q = kq.QClass

QUADRATICAL_ORDERS_200 = [5, 13, 17, 25, 29, 37, 41, 53, 61, 65, 73, 85, 89, 97, 101, 109,
                          113, 125, 137, 145, 149, 157, 169, 173, 181, 185, 193, 197]


def test00_quadratical_orders():
    assert kq.quadratical_orders(200) == QUADRATICAL_ORDERS_200
    assert kq.quadratical_orders_by_sweep(200) == QUADRATICAL_ORDERS_200
    assert kq.quadratical_orders(4) == []


def _by_label(surveys):
    return {s.label: s for s in surveys}


def test01_pair_survey(caplog):
    with caplog.at_level(logging.WARNING, logger='kquasi'):
        surveys = _by_label(kq.class_pair_survey(max_n=60))

    assert surveys['quadratical & c3'].witnesses == ((13, 3),)
    assert surveys['quadratical & c3'].agrees
    assert surveys['aro & c3'].witnesses == ((7, 2),)
    assert surveys['quadratical & right_modular'].witnesses == ((5, 2),)
    assert surveys['hexagonal & aro'].witnesses == ((7, 5),)
    assert surveys['aro & dual c3'].witnesses == ((31, 27),)
    assert surveys['gs & stein'].witnesses == ()

    # Same polynomial, so they always coincide
    stein_lm = surveys['left_modular & stein']
    assert stein_lm.claim is None and stein_lm.agrees and stein_lm.witnesses

    anomalies = [label for label, s in surveys.items() if not s.agrees]
    assert anomalies == ['quadratical & stein']
    assert surveys['quadratical & stein'].witnesses == ((5, 4),)
    assert 'quadratical & stein' in caplog.text


def test02_claims_are_truncated_to_the_bound():
    surveys = _by_label(kq.class_pair_survey(max_n=21))
    dual = surveys['aro & dual c3']
    assert dual.expected == () and dual.witnesses == () and dual.agrees
    assert dual.to_dict() == {'pair': 'aro & dual c3', 'witnesses': [], 'claim': [],
                              'agrees': True}


def test03_every_claim_is_surveyed():
    surveyed = {(s.first, s.second, s.dual_second) for s in kq.class_pair_survey(max_n=15)}
    for first, second, dual_second in kq.PAIR_CLAIMS:
        assert (first, second, dual_second) in surveyed \
            or (second, first, dual_second) in surveyed


def test04_no_cheban_or_schroeder_instances():
    result = kq.cheban_schroeder_check(max_n=31, table_max_n=13)
    assert result.ok
    assert result.scanned > 0
    assert result.to_dict()['cheban_witnesses'] == []


@pytest.mark.slow
def test05_default_bounds():
    surveys = kq.class_pair_survey()
    assert [s.label for s in surveys if not s.agrees] == ['quadratical & stein']
    assert kq.cheban_schroeder_check().ok
