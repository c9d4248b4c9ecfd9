from dataclasses import dataclass, field
from itertools import combinations
from typing import List, Optional, Tuple

import numpy as np
from sympy import factorint

from .. import defaults
from ..errors import CounterexampleFound
from ..log import Log, LogLevel
from ..tables import (IDENTITIES, IdentityId, QClass, check_identity, holds_linear,
                      table_classes)
from ..utils import odd_orders, partitioned_map, progress, valid_a
from .classification import (class_masks, classify, criterion, is_quadratical_linear,
                             k_for_class)
from .linear_groupoid import build, translatable_k


def quadratical_orders(limit=defaults.ORDERS_LIMIT):
    """Every 1 < n <= limit whose prime factors are all 1 mod 4."""
    return [n for n in range(2, limit + 1)
            if all(p % 4 == 1 for p in factorint(n))]


def quadratical_orders_by_sweep(limit=defaults.ORDERS_LIMIT):
    """Every 1 < n <= limit admitting some a with 2a² - 2a + 1 = 0 (mod n)."""
    orders = []
    for n in range(2, limit + 1):
        a = np.arange(n, dtype=np.int64)
        if np.any((2 * a * a - 2 * a + 1) % n == 0):
            orders.append(n)
    return orders


# Published intersections of two classes: () means no instance exists, otherwise
# the only (n, a). A ``True`` third element pairs the first class with the dual
# of the second.
PAIR_CLAIMS = {
    (QClass.Quadratical, QClass.C3, False): ((13, 3),),
    (QClass.ARO, QClass.C3, False): ((7, 2),),
    (QClass.Quadratical, QClass.RightModular, False): ((5, 2),),
    (QClass.Hexagonal, QClass.ARO, False): ((7, 5),),
    (QClass.ARO, QClass.C3, True): ((31, 27),),
    (QClass.RightModular, QClass.ARO, False): (),
    (QClass.Stein, QClass.C3, False): (),
    (QClass.RightModular, QClass.Stein, False): (),
    (QClass.GS, QClass.RightModular, False): (),
    (QClass.Stein, QClass.ARO, False): (),
    (QClass.GS, QClass.ARO, False): (),
    (QClass.GS, QClass.Stein, False): (),
    (QClass.GS, QClass.C3, False): (),
    (QClass.Hexagonal, QClass.Stein, False): (),
    (QClass.Hexagonal, QClass.C3, False): (),
    (QClass.Hexagonal, QClass.RightModular, False): (),
    (QClass.Hexagonal, QClass.GS, False): (),
    (QClass.Quadratical, QClass.Hexagonal, False): (),
    (QClass.Quadratical, QClass.ARO, False): (),
    (QClass.Quadratical, QClass.GS, False): (),
    (QClass.RightModular, QClass.C3, False): (),
    (QClass.Quadratical, QClass.Stein, False): (),
}


def _claim_for(first, second, dual_second):
    for key in ((first, second, dual_second), (second, first, dual_second)):
        if key in PAIR_CLAIMS and (not dual_second or key[0] == first):
            return PAIR_CLAIMS[key]
    return None


@dataclass(frozen=True)
class PairSurvey:
    first: QClass
    second: QClass
    dual_second: bool
    witnesses: Tuple[Tuple[int, int], ...]
    claim: Optional[Tuple[Tuple[int, int], ...]]
    max_n: int

    @property
    def expected(self):
        if self.claim is None:
            return None
        return tuple(w for w in self.claim if w[0] <= self.max_n)

    @property
    def agrees(self):
        return self.claim is None or self.witnesses == self.expected

    @property
    def label(self):
        second = f'dual {self.second.value}' if self.dual_second else self.second.value
        return f'{self.first.value} & {second}'

    def to_dict(self):
        return {
            'pair': self.label,
            'witnesses': [list(w) for w in self.witnesses],
            'claim': None if self.expected is None else [list(w) for w in self.expected],
            'agrees': self.agrees,
        }


def class_pair_survey(max_n=defaults.SURVEY_MAX_N, verbose=False):
    """
    For every unordered pair of classes, every (n, a) with odd n <= max_n in
    both. The dual pairings listed in ``PAIR_CLAIMS`` are surveyed too, with the
    second class tested on the dual groupoid (coefficient b = 1 - a).
    """
    pairs = [(first, second, False) for first, second in combinations(QClass, 2)]
    pairs += [key for key in PAIR_CLAIMS if key[2]]
    witnesses = {pair: [] for pair in pairs}

    for n in progress(odd_orders(max_n), verbose, desc='class pairs'):
        masks = class_masks(n)
        # masks[cls][(1 - a) % n] tests the dual x*y = (1-a)x + ay
        dual_index = (1 - np.arange(n)) % n
        for first, second, dual_second in pairs:
            other = masks[second][dual_index] if dual_second else masks[second]
            for a in np.flatnonzero(masks[first] & other):
                witnesses[(first, second, dual_second)].append((n, int(a)))

    surveys = []
    for first, second, dual_second in pairs:
        survey = PairSurvey(first, second, dual_second,
                            tuple(witnesses[(first, second, dual_second)]),
                            _claim_for(first, second, dual_second), max_n)
        if not survey.agrees:
            Log(LogLevel.Warn,
                f'class_pair_survey(): {survey.label} has witnesses {list(survey.witnesses)}, '
                f'published as {list(survey.expected)}')
        surveys.append(survey)
    return surveys


@dataclass(frozen=True)
class NonexistenceReport:
    max_n: int
    scanned: int
    table_max_n: int
    cheban_witnesses: Tuple[Tuple[int, int], ...]
    schroeder_witnesses: Tuple[Tuple[int, int], ...]

    @property
    def ok(self):
        return not self.cheban_witnesses and not self.schroeder_witnesses

    def to_dict(self):
        return {
            'max_n': self.max_n,
            'scanned': self.scanned,
            'table_max_n': self.table_max_n,
            'cheban_witnesses': [list(w) for w in self.cheban_witnesses],
            'schroeder_witnesses': [list(w) for w in self.schroeder_witnesses],
        }


def cheban_schroeder_check(max_n=defaults.INVARIANT_MAX_N,
                           table_max_n=defaults.QUADRUPLE_MAX_N, verbose=False):
    """
    Sweeps every idempotent translatable quasigroup x·y = ax + (1-a)y with odd
    n <= max_n for the Cheban and Schröder laws.

    Both laws are evaluated on coefficients; Schröder is also checked on every
    built table and Cheban on the tables with n <= table_max_n.
    Raises ``CounterexampleFound`` if any instance satisfies either law.
    """
    cheban = IDENTITIES[IdentityId.Cheban]
    schroeder = IDENTITIES[IdentityId.Schroeder]
    scanned = 0
    cheban_witnesses, schroeder_witnesses = [], []
    for n in progress(odd_orders(max_n), verbose, desc='nonexistence'):
        for a in np.flatnonzero(valid_a(n)):
            a = int(a)
            b = (1 - a) % n
            scanned += 1
            table = build(n, a, b)
            if holds_linear(cheban, n, a, b) or (
                    n <= table_max_n and check_identity(table, IdentityId.Cheban)):
                cheban_witnesses.append((n, a))
            if holds_linear(schroeder, n, a, b) or check_identity(table, IdentityId.Schroeder):
                schroeder_witnesses.append((n, a))

    result = NonexistenceReport(max_n, scanned, table_max_n,
                                tuple(cheban_witnesses), tuple(schroeder_witnesses))
    if not result.ok:
        raise CounterexampleFound('Cheban or Schröder instance found', result.to_dict())
    return result


@dataclass
class SweepReport:
    """
    Outcome of a bounded verification sweep: how many instances were checked
    and every failure found, each a JSON-serialisable dict.
    """
    name: str
    max_n: int
    checked: int = 0
    failures: List[dict] = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def merge(self, checked, failures):
        self.checked += checked
        self.failures.extend(failures)

    def raise_if_failed(self):
        if not self.ok:
            raise CounterexampleFound(f'{self.name}: {len(self.failures)} failure(s)',
                                      self.to_dict())
        return self

    def to_dict(self):
        return {'name': self.name, 'max_n': self.max_n, 'checked': self.checked,
                'ok': self.ok, 'failures': self.failures}


def _classification_at(n):
    checked, failures = 0, []
    for a in np.flatnonzero(valid_a(n)):
        a = int(a)
        b = (1 - a) % n
        checked += 1
        classes = classify(n, a)
        observed = table_classes(build(n, a, b))
        k = translatable_k(n, a, b)
        forced = {cls.value: k_for_class(n, a, cls) for cls in classes}
        quadratical = criterion(n, a, QClass.Quadratical)
        if (classes != observed or any(v != k for v in forced.values())
                or is_quadratical_linear(n, a, b, k) != quadratical):
            failures.append({
                'n': n, 'a': a, 'k': k, 'forced_k': forced,
                'classes': sorted(cls.value for cls in classes),
                'table_classes': sorted(cls.value for cls in observed),
            })
    return checked, failures


def verify_classification(max_n=defaults.INVARIANT_MAX_N, verbose=False):
    """
    For every idempotent translatable quasigroup with odd n <= max_n: the class
    criteria match the laws checked on the built table, every class forces the
    translatability value of the table, and the linear quadratical test agrees
    with the quadratical criterion.
    """
    report = SweepReport('classification', max_n)
    for checked, failures in partitioned_map(_classification_at, odd_orders(max_n),
                                             verbose, desc='classification'):
        report.merge(checked, failures)
    if not report.ok:
        Log(LogLevel.Warn, f'verify_classification(max_n={max_n}): '
                           f'{len(report.failures)} mismatch(es)')
    return report
