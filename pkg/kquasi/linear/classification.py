from dataclasses import dataclass
from math import gcd
from typing import FrozenSet, Optional, Tuple

import numpy as np

from ..errors import CriterionViolated, EvenOrder, NotAQuasigroup
from ..log import Log, LogLevel
from ..tables import QClass
from ..utils import inverse, odd_orders, valid_a
from .linear_groupoid import translatable_k


def _polynomials(a, n):
    a = np.asarray(a, dtype=np.int64) % n
    a2 = (a * a) % n
    a3 = (a2 * a) % n
    return {
        QClass.Quadratical: (2 * a2 - 2 * a + 1) % n == 0,
        QClass.Hexagonal: (a2 - a + 1) % n == 0,
        QClass.GS: (a2 - a - 1) % n == 0,
        QClass.RightModular: (a2 + a - 1) % n == 0,
        QClass.LeftModular: (a2 - 3 * a + 1) % n == 0,
        QClass.Stein: (a2 - 3 * a + 1) % n == 0,
        QClass.ARO: (2 * a2 - 1) % n == 0,
        QClass.C3: (a3 - 1) % n == 0,
    }


def criterion(n, a, cls):
    """The defining polynomial congruence of ``cls`` at a (b = 1 - a)."""
    return bool(_polynomials(a, n)[QClass(cls)])


def class_masks(n):
    """Boolean masks over a in Z_n of every class criterion, restricted to quasigroups."""
    valid = valid_a(n)
    return {cls: mask & valid for cls, mask in _polynomials(np.arange(n), n).items()}


def _require_odd_quasigroup(n, a):
    if n % 2 == 0:
        raise EvenOrder(f'idempotent translatable quasigroups have odd order, got n={n}')
    if gcd(a % n, n) != 1 or gcd((1 - a) % n, n) != 1:
        raise NotAQuasigroup(
            f'x·y = {a % n}x + {(1 - a) % n}y mod {n} is not a quasigroup: a and 1-a must be units')


def classify(n, a):
    """Every class whose criterion holds for ``x·y = ax + (1-a)y mod n``."""
    _require_odd_quasigroup(n, a)
    return {cls for cls, holds in _polynomials(a, n).items() if holds}


def k_for_class(n, a, cls):
    """The translatability value forced by membership in ``cls``."""
    cls = QClass(cls)
    _require_odd_quasigroup(n, a)
    if not criterion(n, a, cls):
        raise CriterionViolated(f'a={a} mod {n} does not satisfy the {cls.value} criterion')
    a = a % n
    if cls == QClass.C3:
        # (1 - a²)k = 1
        return inverse(1 - a * a, n)
    closed_forms = {
        QClass.Quadratical: 1 - 2 * a,
        QClass.Hexagonal: 1 - a,
        QClass.GS: a + 1,
        QClass.RightModular: -1 - a,
        QClass.LeftModular: a - 1,
        QClass.Stein: a - 1,
        QClass.ARO: -1 - 2 * a,
    }
    return closed_forms[cls] % n


def is_quadratical_linear(n, a, b, k):
    """``a + b = 1``, ``2ab = 1`` and ``a + bk = 0`` (mod n)."""
    return ((a + b) % n == 1 % n and (2 * a * b) % n == 1 % n
            and (a + b * k) % n == 0)


def _ordered(classes):
    return tuple(cls for cls in QClass if cls in classes)


@dataclass(frozen=True)
class ClassificationReport:
    n: int
    a: int
    b: int
    k: Optional[int]
    classes: FrozenSet[QClass]
    commutative: bool
    quasigroup: bool
    idempotent: bool
    dual_classes: FrozenSet[QClass] = frozenset()
    anomalies: Tuple[str, ...] = ()

    def to_dict(self):
        return {
            'n': self.n, 'a': self.a, 'b': self.b, 'k': self.k,
            'classes': [cls.value for cls in _ordered(self.classes)],
            'dual_classes': [cls.value for cls in _ordered(self.dual_classes)],
            'commutative': self.commutative,
            'quasigroup': self.quasigroup,
            'idempotent': self.idempotent,
            'anomalies': list(self.anomalies),
        }


def report(n, a, b=None):
    """
    Full verdict on the linear groupoid (n, a, b); b defaults to 1 - a.

    Classes are only assigned to idempotent quasigroups of odd order; other
    groupoids get an empty class set rather than an error.
    """
    a = a % n
    b = (1 - a) % n if b is None else b % n
    idempotent = (a + b) % n == 1 % n
    quasigroup = gcd(a, n) == 1 and gcd(b, n) == 1
    if idempotent:
        k = translatable_k(n, a, b)
    else:
        b_inv = inverse(b, n)
        k = None if b_inv is None else (-a * b_inv) % n

    classes, dual_classes, anomalies = set(), set(), []
    if idempotent and quasigroup and n % 2 == 1:
        classes = classify(n, a)
        dual_classes = classify(n, b)
        for cls in classes:
            k_cls = k_for_class(n, a, cls)
            if k_cls != k:
                message = f'{cls.value}: class value k={k_cls} differs from translatability value k={k}'
                Log(LogLevel.Warn, f'report(n={n}, a={a}, b={b}): {message}')
                anomalies.append(message)

    return ClassificationReport(n, a, b, k, frozenset(classes), a == b, quasigroup,
                                idempotent, frozenset(dual_classes), tuple(anomalies))


def commutative_instances(max_n):
    """
    For each class, every (n, a) with odd n <= max_n whose commutative member
    (a = b, so 2a = 1) satisfies the class criterion.
    """
    instances = {cls: [] for cls in QClass}
    for n in odd_orders(max_n):
        a = (n + 1) // 2
        if not valid_a(n)[a]:
            continue
        for cls, holds in _polynomials(a, n).items():
            if holds:
                instances[cls].append((n, a))
    return instances
