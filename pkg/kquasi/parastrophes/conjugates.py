import enum
from dataclasses import dataclass

import numpy as np

from ..errors import CriterionViolated, NotAQuasigroup, NotInvertible
from ..tables import CayleyTable, is_quasigroup
from ..utils import inverse


class ParastropheKind(enum.IntEnum):
    """
    The five conjugates of ``x·y = z``, each defined by ``x∘y = z`` iff

    1. ``x·z = y`` (left division)
    2. ``z·y = x`` (right division)
    3. ``z·x = y``
    4. ``y·z = x``
    5. ``y·x = z`` (the dual)
    """
    LeftDivision = 1
    RightDivision = 2
    ReversedRightDivision = 3
    ReversedLeftDivision = 4
    Dual = 5

    @property
    def label(self):
        return f'Q{int(self)}'


def parastrophe_table(t, kind):
    """The table of parastrophe ``kind`` of the quasigroup ``t``."""
    if not is_quasigroup(t):
        raise NotAQuasigroup('parastrophes are only defined for quasigroups')
    kind = ParastropheKind(kind)
    n = t.n
    T = t.entries
    if kind == ParastropheKind.Dual:
        return CayleyTable(T.T)

    I = np.broadcast_to(np.arange(n)[:, None], (n, n))
    J = np.broadcast_to(np.arange(n)[None, :], (n, n))
    out = np.empty((n, n), dtype=np.int64)
    if kind == ParastropheKind.LeftDivision:
        out[I, T] = J
    elif kind == ParastropheKind.RightDivision:
        out[T, J] = I
    elif kind == ParastropheKind.ReversedRightDivision:
        out[J, T] = I
    else:
        out[T, I] = J
    return CayleyTable(out)


def all_parastrophes(t):
    return {kind: parastrophe_table(t, kind) for kind in ParastropheKind}


@dataclass(frozen=True)
class ParastropheCoeffs:
    """Linear form ``x∘y = (a_star·x + b_star·y) mod n`` of a parastrophe and its k*."""
    kind: ParastropheKind
    a_star: int
    b_star: int
    kstar: int

    def to_dict(self):
        return {'kind': self.kind.label, 'a': self.a_star, 'b': self.b_star,
                'kstar': self.kstar}


def _unit_inverses(n, a, b):
    a_inv, b_inv = inverse(a, n), inverse(b, n)
    if a_inv is None or b_inv is None:
        raise NotInvertible(f'({a}, {b}) mod {n}: both coefficients must be units')
    return a_inv, b_inv


def _require_idempotent(n, a, b):
    if (a + b) % n != 1 % n:
        raise CriterionViolated(f'({a}, {b}) mod {n} is not idempotent: a + b != 1')


def parastrophe_coeffs(n, a, b, kind):
    """
    Closed-form coefficients of parastrophe ``kind`` of the idempotent
    quasigroup ``x·y = ax + by (mod n)``, together with its translatability
    value k*. With a′, b′ the inverses of a and b, and k = 1 - b′ the value of
    the source:

    ====  ==============  =======
    kind  (a*, b*)        k*
    ====  ==============  =======
    1     (1 - b′, b′)    a
    2     (a′, 1 - a′)    1 - k
    3     (1 - a′, a′)    1 - a
    4     (b′, 1 - b′)    a′
    5     (b, a)          1 - a′
    ====  ==============  =======
    """
    a, b = a % n, b % n
    a_inv, b_inv = _unit_inverses(n, a, b)
    _require_idempotent(n, a, b)
    kind = ParastropheKind(kind)
    k = (1 - b_inv) % n
    forms = {
        ParastropheKind.LeftDivision: (1 - b_inv, b_inv, a),
        ParastropheKind.RightDivision: (a_inv, 1 - a_inv, 1 - k),
        ParastropheKind.ReversedRightDivision: (1 - a_inv, a_inv, 1 - a),
        ParastropheKind.ReversedLeftDivision: (b_inv, 1 - b_inv, a_inv),
        ParastropheKind.Dual: (b, a, 1 - a_inv),
    }
    a_star, b_star, kstar = forms[kind]
    return ParastropheCoeffs(kind, a_star % n, b_star % n, kstar % n)


class EqualityCase(enum.Enum):
    """
    Which of the six tables ``Q_a, Q1, ..., Q5`` of an idempotent translatable
    quasigroup coincide. ``partition`` lists the blocks of equal tables by
    index (0 is ``Q_a`` itself).
    """
    AllEqual = 'a'
    Q3Q4Split = 'b'
    Q1Chain = 'c'
    Q2Chain = 'd'
    Q5Split = 'e'
    AllDistinct = 'f'

    @property
    def partition(self):
        return _PARTITIONS[self]


_PARTITIONS = {
    EqualityCase.AllEqual: ((0, 1, 2, 3, 4, 5),),
    EqualityCase.Q3Q4Split: ((0, 3, 4), (1, 2, 5)),
    EqualityCase.Q1Chain: ((0, 1), (2, 3), (4, 5)),
    EqualityCase.Q2Chain: ((0, 2), (1, 4), (3, 5)),
    EqualityCase.Q5Split: ((0, 5), (1, 3), (2, 4)),
    EqualityCase.AllDistinct: ((0,), (1,), (2,), (3,), (4,), (5,)),
}


def equality_case(n, a, b):
    a, b = a % n, b % n
    _unit_inverses(n, a, b)
    _require_idempotent(n, a, b)
    if (n, a, b) == (3, 2, 2):
        return EqualityCase.AllEqual
    if (a * b) % n == 1 and a != b:
        return EqualityCase.Q3Q4Split
    if n > 3 and (a, b) == (2, n - 1):
        return EqualityCase.Q1Chain
    if n > 3 and (a, b) == (n - 1, 2):
        return EqualityCase.Q2Chain
    if n > 3 and a == b:
        return EqualityCase.Q5Split
    return EqualityCase.AllDistinct


def table_partition(tables):
    """Blocks of equal tables in ``tables``, by index, in order of first occurrence."""
    blocks = []
    for index, table in enumerate(tables):
        for block in blocks:
            if tables[block[0]] == table:
                block.append(index)
                break
        else:
            blocks.append([index])
    return tuple(tuple(block) for block in blocks)
