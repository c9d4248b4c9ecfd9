import enum
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np


class IdentityId(enum.Enum):
    Idempotent = 'idempotent'
    PropertyA = 'property_a'
    Elastic = 'elastic'
    StrongElastic = 'strong_elastic'
    Bookend = 'bookend'
    LeftDistributive = 'left_distributive'
    RightDistributive = 'right_distributive'
    Medial = 'medial'
    Alterable = 'alterable'
    FlexLeft = 'flex_left'
    FlexRight = 'flex_right'
    Hexagonal = 'hexagonal'
    GS1 = 'gs1'
    GS2 = 'gs2'
    Stein = 'stein'
    LeftModular = 'left_modular'
    RightModular = 'right_modular'
    C3 = 'c3'
    ARO = 'aro'
    Cheban = 'cheban'
    Schroeder = 'schroeder'


@dataclass(frozen=True)
class Identity:
    """
    A law of the catalogue, written once against an abstract product.

    ``equations(mul, *variables)`` returns the (lhs, rhs) pairs that must agree.
    When ``premise`` is given the law is the implication
    ``premise(mul, *variables)`` holds => every equation holds.
    """
    tag: IdentityId
    arity: int
    equations: Callable
    premise: Optional[Callable] = None
    description: str = ''

    @property
    def is_equational(self):
        return self.premise is None


def _law(tag, arity, description, premise=None):
    def wrap(equations):
        return Identity(tag, arity, equations, premise, description)
    return wrap


@_law(IdentityId.Idempotent, 1, 'x·x = x')
def _idempotent(m, x):
    return [(m(x, x), x)]


@_law(IdentityId.PropertyA, 3, 'xy·x = zx·yz')
def _property_a(m, x, y, z):
    return [(m(m(x, y), x), m(m(z, x), m(y, z)))]


@_law(IdentityId.Elastic, 2, 'x·yx = xy·x')
def _elastic(m, x, y):
    return [(m(x, m(y, x)), m(m(x, y), x))]


@_law(IdentityId.StrongElastic, 2, 'x·yx = xy·x = yx·y')
def _strong_elastic(m, x, y):
    return [(m(x, m(y, x)), m(m(x, y), x)),
            (m(m(x, y), x), m(m(y, x), y))]


@_law(IdentityId.Bookend, 2, 'yx·xy = x')
def _bookend(m, x, y):
    return [(m(m(y, x), m(x, y)), x)]


@_law(IdentityId.LeftDistributive, 3, 'x·yz = xy·xz')
def _left_distributive(m, x, y, z):
    return [(m(x, m(y, z)), m(m(x, y), m(x, z)))]


@_law(IdentityId.RightDistributive, 3, 'xy·z = xz·yz')
def _right_distributive(m, x, y, z):
    return [(m(m(x, y), z), m(m(x, z), m(y, z)))]


@_law(IdentityId.Medial, 4, 'xy·zw = xz·yw')
def _medial(m, x, y, z, w):
    return [(m(m(x, y), m(z, w)), m(m(x, z), m(y, w)))]


def _alterable_premise(m, x, y, z, w):
    return (m(x, y), m(z, w))


@_law(IdentityId.Alterable, 4, 'xy = zw => yz = wx', premise=_alterable_premise)
def _alterable(m, x, y, z, w):
    return [(m(y, z), m(w, x))]


@_law(IdentityId.FlexLeft, 2, 'x(y·yx) = (xy·x)y')
def _flex_left(m, x, y):
    return [(m(x, m(y, m(y, x))), m(m(m(x, y), x), y))]


@_law(IdentityId.FlexRight, 2, '(xy·y)x = y(x·yx)')
def _flex_right(m, x, y):
    return [(m(m(m(x, y), y), x), m(y, m(x, m(y, x))))]


@_law(IdentityId.Hexagonal, 2, 'x·yx = y')
def _hexagonal(m, x, y):
    return [(m(x, m(y, x)), y)]


@_law(IdentityId.GS1, 3, 'x(xy·z)·z = y')
def _gs1(m, x, y, z):
    return [(m(m(x, m(m(x, y), z)), z), y)]


@_law(IdentityId.GS2, 3, 'x·(x·yz)z = y')
def _gs2(m, x, y, z):
    return [(m(x, m(m(x, m(y, z)), z)), y)]


@_law(IdentityId.Stein, 2, 'x·xy = yx')
def _stein(m, x, y):
    return [(m(x, m(x, y)), m(y, x))]


@_law(IdentityId.LeftModular, 3, 'x·yz = z·yx')
def _left_modular(m, x, y, z):
    return [(m(x, m(y, z)), m(z, m(y, x)))]


@_law(IdentityId.RightModular, 3, 'xy·z = zy·x')
def _right_modular(m, x, y, z):
    return [(m(m(x, y), z), m(m(z, y), x))]


@_law(IdentityId.C3, 2, '(xy·y)y = x')
def _c3(m, x, y):
    return [(m(m(m(x, y), y), y), x)]


@_law(IdentityId.ARO, 2, 'xy·y = yx·x')
def _aro(m, x, y):
    return [(m(m(x, y), y), m(m(y, x), x))]


@_law(IdentityId.Cheban, 3, 'x(xy·z) = (y·zx)x')
def _cheban(m, x, y, z):
    return [(m(x, m(m(x, y), z)), m(m(y, m(z, x)), x))]


@_law(IdentityId.Schroeder, 2, 'xy·yx = x')
def _schroeder(m, x, y):
    return [(m(m(x, y), m(y, x)), x)]


IDENTITIES = {law.tag: law for law in (
    _idempotent, _property_a, _elastic, _strong_elastic, _bookend,
    _left_distributive, _right_distributive, _medial, _alterable,
    _flex_left, _flex_right, _hexagonal, _gs1, _gs2, _stein,
    _left_modular, _right_modular, _c3, _aro, _cheban, _schroeder)}


# ----------------------------------------------------------------------
# Evaluation on explicit tables

def _grids(n, arity):
    axes = []
    for position in range(arity):
        shape = [1] * arity
        shape[position] = n
        axes.append(np.arange(n).reshape(shape))
    return axes


def _holds_on(entries, law, variables):
    def mul(u, v):
        return entries[u, v]

    agree = np.bool_(True)
    for lhs, rhs in law.equations(mul, *variables):
        agree = np.logical_and(agree, np.asarray(lhs) == np.asarray(rhs))
    if law.premise is not None:
        p_lhs, p_rhs = np.broadcast_arrays(*law.premise(mul, *variables))
        agree = np.logical_or(p_lhs != p_rhs, agree)
    return bool(np.all(agree))


def check_law(t, law):
    """Exhaustively quantify ``law`` over all element tuples of ``t``."""
    entries = t.entries
    n = t.n
    if law.arity <= 3:
        return _holds_on(entries, law, _grids(n, law.arity))
    # Arity 4: fix the first variable, vectorise the remaining three
    rest = _grids(n, law.arity - 1)
    for x in range(n):
        if not _holds_on(entries, law, [np.int64(x)] + rest):
            return False
    return True


def check_identity(t, identity_id):
    """``True`` iff the catalogue law ``identity_id`` holds everywhere in ``t``."""
    return check_law(t, IDENTITIES[IdentityId(identity_id)])


# ----------------------------------------------------------------------
# Evaluation on linear forms x·y = (ax+by) mod n

def holds_linear(law, n, a, b):
    """
    Evaluates an equational law on the linear groupoid (n, a, b) symbolically.

    Every term of the law is a linear combination of its variables, so two terms
    agree for all assignments iff their coefficient vectors agree mod n.
    """
    if not law.is_equational:
        raise TypeError(f'{law.tag.name} is an implication; evaluate it on a table')

    def mul(u, v):
        return (a * u + b * v) % n

    variables = list(np.eye(law.arity, dtype=np.int64))
    return all(np.array_equal(np.asarray(lhs) % n, np.asarray(rhs) % n)
               for lhs, rhs in law.equations(mul, *variables))
