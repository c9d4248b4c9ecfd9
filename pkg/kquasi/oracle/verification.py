from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List

import numpy as np

from .. import defaults
from ..errors import CounterexampleFound, DiscrepancyFound
from ..linear import NonexistenceReport, build, solve_from_k
from ..log import Log, LogLevel
from ..tables import CayleyTable, IdentityId, check_identity, is_quasigroup
from .enumeration import check_enumeration_order, enumerate
from .isomorphism import are_isomorphic


def closed_form_tables(n, k, quasigroups_only=True):
    """The tables the closed form predicts for ``enumerate(n, k)``."""
    coeffs = solve_from_k(n, k)
    if coeffs is None:
        return set()
    table = build(n, *coeffs)
    if quasigroups_only and not is_quasigroup(table):
        return set()
    return {table}


@dataclass
class OracleReport:
    max_n: int
    quasigroups_only: bool
    checked: int = 0
    survivors: Dict[str, int] = field(default_factory=dict)
    k1_survivors: int = 0
    discrepancies: List[dict] = field(default_factory=list)
    non_isomorphic: List[dict] = field(default_factory=list)

    @property
    def ok(self):
        return not self.discrepancies and not self.non_isomorphic

    def to_dict(self):
        return {
            'max_n': self.max_n, 'quasigroups_only': self.quasigroups_only,
            'checked': self.checked, 'survivors': self.survivors,
            'k1_survivors': self.k1_survivors, 'discrepancies': self.discrepancies,
            'non_isomorphic': self.non_isomorphic, 'ok': self.ok,
        }


def oracle_vs_closed_form(max_n=defaults.ORACLE_MAX_N, quasigroups_only=True, verbose=False):
    """
    Compares, for every 2 <= n <= max_n and every k, the brute-force survivors
    with the closed-form prediction, and checks that survivors sharing (n, k)
    are pairwise isomorphic and that each is found isomorphic to a copy with
    two labels swapped. Raises ``DiscrepancyFound`` on any mismatch.
    """
    check_enumeration_order(max_n, max_n)
    report = OracleReport(max_n, quasigroups_only)
    for n in range(2, max_n + 1):
        for k in range(1, n):
            result = enumerate(n, k, quasigroups_only, max_n=max_n, verbose=verbose)
            found = set(result.tables)
            expected = closed_form_tables(n, k, quasigroups_only)
            report.checked += 1
            report.survivors[f'{n},{k}'] = len(result)
            if k == 1:
                report.k1_survivors += len(result)
            if found != expected or len(found) != len(result):
                report.discrepancies.append({
                    'n': n, 'k': k,
                    'found': sorted(t.tolist() for t in found),
                    'expected': sorted(t.tolist() for t in expected),
                })
            for t1, t2 in combinations(result.tables, 2):
                if are_isomorphic(t1, t2, max_n=max(n, defaults.ISOMORPHISM_MAX_N)) is None:
                    report.non_isomorphic.append({'n': n, 'k': k})
            for t in result.tables:
                if are_isomorphic(t, _relabelled(t), max_n=max(n, defaults.ISOMORPHISM_MAX_N)) is None:
                    report.non_isomorphic.append({'n': n, 'k': k, 'relabelled': t.tolist()})
    Log(LogLevel.Info,
        f'oracle_vs_closed_form(max_n={max_n}): {report.checked} (n, k) pairs, '
        f'{report.k1_survivors} survivor(s) with k=1')
    if not report.ok:
        raise DiscrepancyFound('enumeration disagrees with the closed form', report.to_dict())
    return report


def nonexistence_on_tables(max_n=defaults.ORACLE_MAX_N, verbose=False):
    """
    Evaluates the Cheban and Schröder laws on every enumerated survivor with
    n <= max_n. Raises ``CounterexampleFound`` if either holds anywhere.
    """
    check_enumeration_order(max_n, max_n)
    scanned = 0
    cheban, schroeder = [], []
    for n in range(2, max_n + 1):
        for k in range(1, n):
            for table, coeffs in zip(*_survivors(n, k, max_n, verbose)):
                scanned += 1
                witness = (n, -1 if coeffs is None else coeffs[0])
                if check_identity(table, IdentityId.Cheban):
                    cheban.append(witness)
                if check_identity(table, IdentityId.Schroeder):
                    schroeder.append(witness)
    result = NonexistenceReport(max_n, scanned, max_n, tuple(cheban), tuple(schroeder))
    if not result.ok:
        raise CounterexampleFound('Cheban or Schröder survivor found', result.to_dict())
    return result


def _relabelled(t):
    # 0 <-> 1, not affine once n >= 4
    perm = np.arange(t.n)
    perm[[0, 1]] = perm[[1, 0]]
    entries = np.empty_like(t.entries)
    entries[np.ix_(perm, perm)] = perm[t.entries]
    return CayleyTable(entries)


def _survivors(n, k, max_n, verbose):
    result = enumerate(n, k, max_n=max_n, verbose=verbose)
    return result.tables, result.linear_matches
