import json

import pytest


def test00_parallel_sweeps_match_serial(workers):
    import kquasi as kq
    serial = kq.verify_closed_forms(max_n=31)
    workers(2)
    parallel = kq.verify_closed_forms(max_n=31)
    assert parallel.to_dict() == serial.to_dict()
    assert parallel.ok

    survivors = kq.oracle.enumerate(7, 3)
    workers(1)
    assert survivors.tables == kq.oracle.enumerate(7, 3).tables


def test01_qg_check(qg):
    code, out = qg('--json', 'check')
    assert code == 0
    assert json.loads(out)['ok']


def test02_qg_exit_codes(qg):
    code, _ = qg('classify', '--n', '8', '--a', '3')
    assert code == 1
    code, out = qg('--json', 'verify-tables', '--max-n', '21', '--table', 'equality')
    assert code == 0
    assert json.loads(out)['reports'][0]['name'] == 'equality_cases'


def test03_qg_json_is_stable(qg):
    _, first = qg('--json', 'survey', '--max-n', '31')
    _, second = qg('--json', 'survey', '--max-n', '31')
    assert first == second


@pytest.mark.slow
def test04_default_tables():
    import kquasi as kq
    for verify in (kq.verify_kstar_by_a, kq.verify_kstar_by_k, kq.verify_parastrophe_types,
                   kq.verify_closed_forms, kq.verify_equality_cases, kq.hexagonal_closure):
        report = verify()
        assert report.ok, report.failures


@pytest.mark.slow
def test05_default_oracle():
    import kquasi as kq
    report = kq.oracle_vs_closed_form()
    assert report.ok and report.k1_survivors == 0
    assert kq.nonexistence_on_tables().ok


@pytest.mark.slow
def test06_qq_round_trip_over_quadratical_orders():
    import kquasi as kq
    for n in kq.quadratical_orders(101):
        for astr in kq.astructures(n):
            assert kq.phi(kq.QQStructure.from_astructure(astr)).to_astructure() == astr


@pytest.mark.slow
def test07_default_classification():
    import kquasi as kq
    report = kq.verify_classification()
    assert report.max_n == 101
    assert report.ok, report.failures


@pytest.mark.slow
def test08_qq_axioms_at_every_point():
    import kquasi as kq
    for n in range(3, 30, 2):
        found = kq.astructures(n)
        assert bool(found) == (n in kq.quadratical_orders(29))
        for astr in found:
            t = kq.psi(astr)
            for s in range(n):
                q = kq.QQStructure.from_translations(t, s)
                assert q.check_axioms().holds, (astr, s)
                assert kq.check_p23(q), (astr, s)


@pytest.mark.slow
def test09_quadruple_laws_over_quadratical_orders():
    import kquasi as kq
    for n in kq.quadratical_orders(31):
        for astr in kq.astructures(n):
            assert kq.check_sum_equivalence(astr)
            assert kq.check_exchange_laws(astr)
            assert kq.check_induced_quadratical(astr)
            assert all(kq.quadratical_laws(kq.psi(astr)).values())
