from dataclasses import dataclass
from typing import Callable, Dict

from .linear import build, dual_k, report, translatable_k_divisibility
from .log import Log, LogLevel
from .parastrophes import ParastropheKind, all_parastrophes, equality_case
from .tables import (QClass, from_translatable_sequence, is_quasigroup,
                     table_classes, translatability)

# 3-translatable quasigroup of order 8 whose only translatable parastrophe is its dual
ORDER_EIGHT_ROW = (0, 3, 2, 1, 7, 6, 5, 4)
ORDER_EIGHT_K = 3


def _class_names(classes):
    return [cls.value for cls in QClass if cls in classes]


def _linear(n, a, b, with_case=False):
    def observe():
        verdict = report(n, a, b)
        observed = {
            'classes': _class_names(verdict.classes),
            'table_classes': _class_names(table_classes(build(n, a, b))),
            'dual_classes': _class_names(verdict.dual_classes),
            'k': verdict.k,
            'commutative': verdict.commutative,
            'quasigroup': verdict.quasigroup,
        }
        if with_case:
            observed['equality_case'] = equality_case(n, a, b).name
        return observed
    return observe


def _non_quasigroup(n, a, b):
    def observe():
        table = build(n, a, b)
        return {
            'idempotent': table.is_idempotent(),
            'quasigroup': is_quasigroup(table),
            'translatability': list(translatability(table)),
            'divisibility_rule': translatable_k_divisibility(n, a, b),
        }
    return observe


def _order_eight():
    table = from_translatable_sequence(ORDER_EIGHT_ROW, ORDER_EIGHT_K)
    parastrophes = all_parastrophes(table)
    translatable = {kind: list(translatability(t)) for kind, t in parastrophes.items()}
    return {
        'quasigroup': is_quasigroup(table),
        'idempotent': table.is_idempotent(),
        'translatability': list(translatability(table)),
        'translatable_parastrophes': [kind.label for kind, ks in translatable.items() if ks],
        'dual_translatability': translatable[ParastropheKind.Dual],
        'dual_k': dual_k(table.n, ORDER_EIGHT_K),
    }


@dataclass(frozen=True)
class NamedExample:
    name: str
    expected: Dict
    observe: Callable[[], Dict]


@dataclass(frozen=True)
class ExampleVerdict:
    name: str
    passed: bool
    expected: Dict
    observed: Dict

    def to_dict(self):
        return {'name': self.name, 'passed': self.passed,
                'expected': self.expected, 'observed': self.observed}


def _linear_expectation(classes, k, commutative=False, dual_classes=(), **extra):
    expected = {'classes': list(classes), 'table_classes': list(classes),
                'dual_classes': list(dual_classes), 'k': k,
                'commutative': commutative, 'quasigroup': True}
    expected.update(extra)
    return expected


NAMED_EXAMPLES = (
    NamedExample('3x + 11y mod 13: the only C3 and quadratical',
                 _linear_expectation(['quadratical', 'c3'], 8, dual_classes=['quadratical']),
                 _linear(13, 3, 11)),
    NamedExample('2x + 6y mod 7: the only C3 and ARO',
                 _linear_expectation(['aro', 'c3'], 2),
                 _linear(7, 2, 6)),
    NamedExample('2x + 4y mod 5: the only right modular and quadratical',
                 _linear_expectation(['quadratical', 'right_modular'], 2,
                                     dual_classes=['quadratical', 'left_modular', 'stein']),
                 _linear(5, 2, 4)),
    NamedExample('5x + 3y mod 7: the only hexagonal and ARO',
                 _linear_expectation(['hexagonal', 'aro'], 3, dual_classes=['hexagonal']),
                 _linear(7, 5, 3)),
    NamedExample('27x + 5y mod 31: the only ARO whose dual is C3',
                 _linear_expectation(['aro'], 7, dual_classes=['c3']),
                 _linear(31, 27, 5)),
    NamedExample('2x + 2y mod 3: every parastrophe coincides',
                 _linear_expectation(['hexagonal'], 2, commutative=True,
                                     dual_classes=['hexagonal'], equality_case='AllEqual'),
                 _linear(3, 2, 2, with_case=True)),
    NamedExample('3x + 3y mod 5: commutative GS',
                 _linear_expectation(['gs'], 4, commutative=True, dual_classes=['gs']),
                 _linear(5, 3, 3)),
    NamedExample('4x + 4y mod 7: commutative C3',
                 _linear_expectation(['c3'], 6, commutative=True, dual_classes=['c3']),
                 _linear(7, 4, 4)),
    NamedExample('4x + 5y mod 8: idempotent 4-translatable, not a quasigroup',
                 {'idempotent': True, 'quasigroup': False, 'translatability': [4],
                  'divisibility_rule': [4]},
                 _non_quasigroup(8, 4, 5)),
    NamedExample('3x + 9y mod 11: all six parastrophe tables distinct',
                 _linear_expectation(['right_modular'], 7, dual_classes=['left_modular', 'stein'],
                                     equality_case='AllDistinct'),
                 _linear(11, 3, 9, with_case=True)),
    NamedExample('order 8, first row 1 4 3 2 8 7 6 5: only the dual is translatable',
                 {'quasigroup': True, 'idempotent': False, 'translatability': [3],
                  'translatable_parastrophes': ['Q5'], 'dual_translatability': [3],
                  'dual_k': 3},
                 _order_eight),
)


def report_named_examples():
    """Checks every instance of ``NAMED_EXAMPLES`` and returns one verdict each."""
    verdicts = []
    for example in NAMED_EXAMPLES:
        observed = example.observe()
        passed = observed == example.expected
        if not passed:
            Log(LogLevel.Warn, f'named example "{example.name}": expected {example.expected}, '
                               f'observed {observed}')
        verdicts.append(ExampleVerdict(example.name, passed, example.expected, observed))
    return verdicts
