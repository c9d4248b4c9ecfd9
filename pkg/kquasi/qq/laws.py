import numpy as np

from .. import defaults
from ..errors import NotQuadratical, OrderTooLarge
from ..linear import recover_linear
from ..log import Log, LogLevel
from ..tables import QClass, class_holds, cyclic_reorder, is_k_translatable
from .astructure import psi
from .structure import QQStructure, phi


def _require_order(n, max_n, what):
    if n > max_n:
        raise OrderTooLarge(
            f'{what}: n={n} exceeds the quadruple cap {max_n}; pass max_n to raise it')
    if max_n > defaults.QUADRUPLE_MAX_N:
        Log(LogLevel.Warn, f'{what}: quadruple cap raised to {max_n}')


def _triples(n):
    return (np.arange(n).reshape(n, 1, 1), np.arange(n).reshape(1, n, 1),
            np.arange(n).reshape(1, 1, n))


def check_sum_equivalence(astr, max_n=defaults.QUADRUPLE_MAX_N):
    """
    ``x ⊕ y = z ⊕ w`` iff ``x + (w ⊕ y) = z + (y ⊕ w)`` and
    ``y + (x ⊕ z) = w + (z ⊕ x)``, over every quadruple of Z_n.
    """
    n = astr.n
    _require_order(n, max_n, 'check_sum_equivalence')
    S = psi(astr).entries
    y, z, w = _triples(n)
    for x in range(n):
        lhs = S[x, y] == S[z, w]
        rhs = (((x + S[w, y]) % n == (z + S[y, w]) % n)
               & ((y + S[x, z]) % n == (w + S[z, x]) % n))
        if not np.array_equal(*np.broadcast_arrays(lhs, rhs)):
            return False
    return True


def check_exchange_laws(astr, max_n=defaults.QUADRUPLE_MAX_N):
    """
    ``(x ⊕ y) + (z ⊕ w) = (x + z) ⊕ (y + w)`` on the A-structure and
    ``(x·y) ⊙ (z·w) = (x ⊙ z)·(y ⊙ w)`` on its QQ-structure, for every
    quadruple.
    """
    n = astr.n
    _require_order(n, max_n, 'check_exchange_laws')
    S = psi(astr).entries
    O = phi(QQStructure.from_astructure(astr)).table.entries
    y, z, w = _triples(n)
    for x in range(n):
        additive = (S[x, y] + S[z, w]) % n == S[(x + z) % n, (y + w) % n]
        if not np.all(additive):
            return False
        recovered = O[S[x, y], S[z, w]] == S[O[x, z], O[y, w]]
        if not np.all(recovered):
            return False
    return True


def is_cyclically_induced(t, k):
    """
    ``True`` iff some cyclic renumbering of the k-translatable quadratical
    quasigroup ``t`` is ``x·y = ax + (1-a)y (mod n)`` with
    ``2a² - 2a + 1 = 0``.
    """
    if not is_k_translatable(t, k) or not class_holds(t, QClass.Quadratical):
        raise NotQuadratical(f'the table is not a {k}-translatable quadratical quasigroup')
    n = t.n
    table = t
    for _ in range(n):
        coeffs = recover_linear(table)
        if coeffs is not None:
            a, b = coeffs
            if (a + b) % n == 1 % n and (2 * a * a - 2 * a + 1) % n == 0:
                return True
        table = cyclic_reorder(table)
    return False
