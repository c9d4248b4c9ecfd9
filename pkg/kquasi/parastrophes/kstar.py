import numpy as np

from .. import defaults
from ..errors import CriterionViolated
from ..linear import QClass, class_masks, criterion, k_for_class
from ..utils import inverse, odd_orders
from .conjugates import ParastropheKind, parastrophe_coeffs


def _require_criterion(n, a, cls):
    if not criterion(n, a, cls):
        raise CriterionViolated(f'a={a} mod {n} does not satisfy the {cls.value} criterion')


def kstar_by_a(n, a, cls):
    """
    Translatability values ``[Q_a, Q1, ..., Q5]`` of a class-``cls`` instance,
    written in terms of a alone.
    """
    cls = QClass(cls)
    a = a % n
    _require_criterion(n, a, cls)
    k = k_for_class(n, a, cls)
    columns = {
        QClass.Quadratical: [1 - 2 * a, a, 2 * a, 1 - a, 2 - 2 * a, 2 * a - 1],
        QClass.Hexagonal: [1 - a, a, a, 1 - a, 1 - a, a],
        QClass.GS: [a + 1, a, -a, 1 - a, a - 1, 2 - a],
        QClass.ARO: [-1 - 2 * a, a, 2 + 2 * a, 1 - a, 2 * a, 1 - 2 * a],
        QClass.Stein: [a - 1, a, 2 - a, 1 - a, 3 - a, a - 2],
        QClass.LeftModular: [a - 1, a, 2 - a, 1 - a, 3 - a, a - 2],
        QClass.RightModular: [-1 - a, a, a + 2, 1 - a, a + 1, -a],
    }
    if cls == QClass.C3:
        a_inv = inverse(a, n)
        row = [k, a, 1 - k, 1 - a, a_inv, 1 - a_inv]
    else:
        row = columns[cls]
    return [int(v % n) for v in row]


def kstar_by_k(k, a, n, cls):
    """
    Translatability values ``[Q1, ..., Q5]`` of a class-``cls`` instance,
    written in terms of its own value k (and a where k alone is not enough).
    """
    cls = QClass(cls)
    a = a % n
    _require_criterion(n, a, cls)
    if k % n != k_for_class(n, a, cls):
        raise CriterionViolated(
            f'k={k} is not the translatability value of the {cls.value} instance a={a} mod {n}')
    rows = {
        QClass.Quadratical: [1 - k - a, 1 - k, k + a, k + 1, -k],
        QClass.Hexagonal: [1 - k, 1 - k, k, k, 1 - k],
        QClass.GS: [k - 1, 1 - k, k - 2 * a, k - 2, 3 - k],
        QClass.ARO: [-1 - k - a, 1 - k, k + a + 2, -1 - k, k + 2],
        QClass.Stein: [k + 1, 1 - k, -k, 2 - k, k - 1],
        QClass.LeftModular: [k + 1, 1 - k, -k, 2 - k, k - 1],
        QClass.RightModular: [-1 - k, 1 - k, k + 2, -k, k + 1],
    }
    if cls == QClass.C3:
        a_inv = inverse(a, n)
        row = [a, 1 - k, 1 - a, a_inv, 1 - a_inv]
    else:
        row = rows[cls]
    return [int(v % n) for v in row]


ALWAYS = 'always'
NEVER = 'never'

# When parastrophe Qi of a class-X instance is again of class X
PARASTROPHE_TYPES = {
    QClass.Quadratical: {
        ParastropheKind.LeftDivision: ((5, 2),),
        ParastropheKind.RightDivision: ((5, 4),),
        ParastropheKind.ReversedRightDivision: ((5, 4),),
        ParastropheKind.ReversedLeftDivision: ((5, 2),),
        ParastropheKind.Dual: ALWAYS,
    },
    QClass.GS: {
        ParastropheKind.LeftDivision: NEVER,
        ParastropheKind.RightDivision: NEVER,
        ParastropheKind.ReversedRightDivision: NEVER,
        ParastropheKind.ReversedLeftDivision: NEVER,
        ParastropheKind.Dual: ALWAYS,
    },
    QClass.ARO: {
        ParastropheKind.LeftDivision: ((7, 2),),
        ParastropheKind.RightDivision: NEVER,
        ParastropheKind.ReversedRightDivision: ((7, 5),),
        ParastropheKind.ReversedLeftDivision: ((7, 5),),
        ParastropheKind.Dual: NEVER,
    },
    QClass.Stein: {
        ParastropheKind.LeftDivision: NEVER,
        ParastropheKind.RightDivision: ALWAYS,
        ParastropheKind.ReversedRightDivision: NEVER,
        ParastropheKind.ReversedLeftDivision: NEVER,
        ParastropheKind.Dual: NEVER,
    },
    QClass.RightModular: {
        ParastropheKind.LeftDivision: ALWAYS,
        ParastropheKind.RightDivision: NEVER,
        ParastropheKind.ReversedRightDivision: NEVER,
        ParastropheKind.ReversedLeftDivision: NEVER,
        ParastropheKind.Dual: NEVER,
    },
    QClass.C3: {
        ParastropheKind.LeftDivision: ((7, 2),),
        ParastropheKind.RightDivision: ALWAYS,
        ParastropheKind.ReversedRightDivision: ((7, 2),),
        ParastropheKind.ReversedLeftDivision: ((7, 4),),
        ParastropheKind.Dual: ((7, 4),),
    },
}


def class_instances(cls, max_n):
    """Every (n, a) with odd n <= max_n whose quasigroup belongs to ``cls``."""
    cls = QClass(cls)
    return [(n, int(a)) for n in odd_orders(max_n)
            for a in np.flatnonzero(class_masks(n)[cls])]


def parastrophe_type_witnesses(cls, kind, max_n=defaults.TABLES_MAX_N):
    """Every class-``cls`` instance (n, a), n <= max_n, whose parastrophe ``kind`` is also in ``cls``."""
    cls = QClass(cls)
    kind = ParastropheKind(kind)
    witnesses = []
    for n, a in class_instances(cls, max_n):
        coeffs = parastrophe_coeffs(n, a, 1 - a, kind)
        if criterion(n, coeffs.a_star, cls):
            witnesses.append((n, a))
    return witnesses


def expected_type_witnesses(cls, kind, max_n):
    """The witnesses ``PARASTROPHE_TYPES`` predicts for the sweep up to ``max_n``."""
    cell = PARASTROPHE_TYPES[QClass(cls)][ParastropheKind(kind)]
    if cell == ALWAYS:
        return class_instances(cls, max_n)
    if cell == NEVER:
        return []
    return [w for w in cell if w[0] <= max_n]
