from functools import partial

import numpy as np

from .. import defaults
from ..linear import (QClass, SweepReport, build, class_masks, criterion,
                      k_for_class)
from ..log import Log, LogLevel
from ..tables import translatability
from ..utils import odd_orders, partitioned_map, valid_a
from .conjugates import (ParastropheKind, all_parastrophes, equality_case,
                         parastrophe_coeffs, table_partition)
from .kstar import (PARASTROPHE_TYPES, expected_type_witnesses, kstar_by_a,
                    kstar_by_k, parastrophe_type_witnesses)


def _instances(n):
    return [int(a) for a in np.flatnonzero(valid_a(n))]


def _closed_forms_at(n):
    checked, failures = 0, []
    for a in _instances(n):
        b = (1 - a) % n
        tables = all_parastrophes(build(n, a, b))
        for kind, table in tables.items():
            checked += 1
            coeffs = parastrophe_coeffs(n, a, b, kind)
            ks = translatability(table).ks
            if build(n, coeffs.a_star, coeffs.b_star) != table or ks != (coeffs.kstar,) \
                    or not table.is_idempotent():
                failures.append({'n': n, 'a': a, 'kind': kind.label,
                                 'coeffs': coeffs.to_dict(), 'translatability': list(ks)})
    return checked, failures


def verify_closed_forms(max_n=defaults.INVARIANT_MAX_N, verbose=False):
    """Closed-form coefficients and k* of every parastrophe against the tables."""
    report = SweepReport('closed_forms', max_n)
    for checked, failures in partitioned_map(_closed_forms_at, odd_orders(max_n),
                                             verbose, desc='closed forms'):
        report.merge(checked, failures)
    return report


def _kstar_at(n, with_tables=True):
    checked, failures = 0, []
    masks = class_masks(n)
    for cls in QClass:
        for a in np.flatnonzero(masks[cls]):
            a = int(a)
            b = (1 - a) % n
            checked += 1
            by_a = kstar_by_a(n, a, cls)
            k = k_for_class(n, a, cls)
            by_k = kstar_by_k(k, a, n, cls)
            expected = [k] + [parastrophe_coeffs(n, a, b, kind).kstar for kind in ParastropheKind]
            if with_tables:
                source = build(n, a, b)
                scanned = [translatability(source).unique] + [
                    translatability(t).unique for t in all_parastrophes(source).values()]
            else:
                scanned = expected
            if by_a != expected or by_a != scanned or by_k != by_a[1:]:
                failures.append({'n': n, 'a': a, 'class': cls.value, 'by_a': by_a,
                                 'by_k': by_k, 'expected': expected, 'scanned': scanned})
    return checked, failures


def verify_kstar_by_a(max_n=defaults.TABLES_MAX_N, verbose=False):
    """``kstar_by_a`` against the closed forms and the table scans of every class instance."""
    report = SweepReport('kstar_by_a', max_n)
    for checked, failures in partitioned_map(_kstar_at, odd_orders(max_n),
                                             verbose, desc='k* by a'):
        report.merge(checked, failures)
    return report


def verify_kstar_by_k(max_n=defaults.TABLES_MAX_N, verbose=False):
    """``kstar_by_k`` after substituting k agrees with ``kstar_by_a``."""
    report = SweepReport('kstar_by_k', max_n)
    for checked, failures in partitioned_map(partial(_kstar_at, with_tables=False),
                                             odd_orders(max_n), verbose, desc='k* by k'):
        report.merge(checked, failures)
    return report


def verify_parastrophe_types(max_n=defaults.TABLES_MAX_N, verbose=False):
    """Every cell of ``PARASTROPHE_TYPES`` against the sweep."""
    report = SweepReport('parastrophe_types', max_n)
    for cls, cells in PARASTROPHE_TYPES.items():
        for kind in cells:
            witnesses = parastrophe_type_witnesses(cls, kind, max_n)
            expected = expected_type_witnesses(cls, kind, max_n)
            failures = []
            if witnesses != expected:
                failures.append({'class': cls.value, 'kind': kind.label,
                                 'witnesses': [list(w) for w in witnesses],
                                 'expected': [list(w) for w in expected]})
            report.merge(1, failures)
    return report


def _equality_at(n):
    checked, failures = 0, []
    for a in _instances(n):
        b = (1 - a) % n
        source = build(n, a, b)
        tables = [source] + list(all_parastrophes(source).values())
        case = equality_case(n, a, b)
        actual = table_partition(tables)
        checked += 1
        if actual != case.partition:
            failures.append({'n': n, 'a': a, 'case': case.value,
                             'partition': [list(block) for block in actual]})
    return checked, failures


def verify_equality_cases(max_n=defaults.EQUALITY_MAX_N, verbose=False):
    """The predicted equality case against the actual equal parastrophe tables."""
    report = SweepReport('equality_cases', max_n)
    for checked, failures in partitioned_map(_equality_at, odd_orders(max_n),
                                             verbose, desc='equality cases'):
        report.merge(checked, failures)
    return report


def hexagonal_closure(max_n=defaults.TABLES_MAX_N, verbose=False):
    """
    A quasigroup is hexagonal iff all its parastrophes are, iff one of them is.
    Checked on the linear criterion of every parastrophe's coefficients.
    """
    report = SweepReport('hexagonal_closure', max_n)
    for n in odd_orders(max_n):
        for a in _instances(n):
            source = criterion(n, a, QClass.Hexagonal)
            found = [criterion(n, parastrophe_coeffs(n, a, 1 - a, kind).a_star, QClass.Hexagonal)
                     for kind in ParastropheKind]
            failures = []
            if not (source == all(found) == any(found)):
                failures.append({'n': n, 'a': a, 'source': source, 'parastrophes': found})
            report.merge(1, failures)
    if report.ok:
        Log(LogLevel.Debug, f'hexagonal_closure(): {report.checked} instances up to n={max_n}')
    return report
