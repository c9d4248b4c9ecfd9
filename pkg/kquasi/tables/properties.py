from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..errors import NotAQuasigroup, NotTranslatable
from .identities import IdentityId, check_identity


def _is_permutation_along(entries, axis):
    n = entries.shape[0]
    ordered = np.sort(entries, axis=axis)
    expected = np.arange(n).reshape((n, 1) if axis == 0 else (1, n))
    return bool(np.all(ordered == expected))


def is_left_cancellative(t):
    """No row of ``t`` repeats an entry (xy = xz => y = z)."""
    return _is_permutation_along(t.entries, axis=1)


def is_right_cancellative(t):
    """No column of ``t`` repeats an entry (yx = zx => y = z)."""
    return _is_permutation_along(t.entries, axis=0)


def is_quasigroup(t):
    """``t`` is a Latin square."""
    return is_left_cancellative(t) and is_right_cancellative(t)


@dataclass(frozen=True)
class TranslatabilityReport:
    """Every k in 1..n-1 for which the stored ordering is k-translatable."""
    ks: Tuple[int, ...]

    def __contains__(self, k):
        return k in self.ks

    def __iter__(self):
        return iter(self.ks)

    def __len__(self):
        return len(self.ks)

    @property
    def unique(self):
        """The single translatability value, or ``None``."""
        return self.ks[0] if len(self.ks) == 1 else None


def shifted(entries, k):
    """``out[i][j] = entries[i+1][j+k]`` (indices mod n)."""
    return np.roll(np.roll(entries, -1, axis=0), -k, axis=1)


def is_k_translatable(t, k):
    return bool(np.array_equal(shifted(t.entries, k % t.n), t.entries))


def translatability(t):
    """
    Scans ``t`` for every k with ``i·j = (i+1)·(j+k)`` for all i, j.

    The only candidates are the columns p of row 1 with ``T[1][p] == T[0][0]``;
    each is then checked on the whole table.
    """
    n = t.n
    if n == 1:
        return TranslatabilityReport(())
    entries = t.entries
    candidates = np.flatnonzero(entries[1] == entries[0, 0])
    ks = tuple(int(k) for k in candidates
               if k != 0 and np.array_equal(shifted(entries, int(k)), entries))
    return TranslatabilityReport(ks)


@dataclass(frozen=True)
class QuadraticalCriteria:
    """The four equivalent descriptions of a quadratical k-translatable quasigroup."""
    a: bool
    b: bool
    c: bool
    d: bool

    @property
    def agree(self):
        return self.a == self.b == self.c == self.d


def _require_translatable_quasigroup(t, k):
    if not is_quasigroup(t):
        raise NotAQuasigroup('the table is not a Latin square')
    if not is_k_translatable(t, k):
        raise NotTranslatable(f'the table is not {k}-translatable')


def quadratical_criteria(t, k):
    """
    Evaluates, on a k-translatable quasigroup, the four conditions

    (a) quadratical (property A);
    (b) ``i + k(z·i) = (j·z) + k(i·j)`` for all i, j, z;
    (c) ``(z·i) + k(j·z) = ki + (i·j)`` for all i, j, z, and k² = -1;
    (d) idempotent, medial and k² = -1;

    all arithmetic on element labels taken mod n.
    """
    _require_translatable_quasigroup(t, k)
    from .classes import QClass, class_holds

    n = t.n
    T = t.entries
    i = np.arange(n).reshape(n, 1, 1)
    j = np.arange(n).reshape(1, n, 1)
    z = np.arange(n).reshape(1, 1, n)
    k_square = (k * k + 1) % n == 0

    crit_b = np.all((i + k * T[z, i]) % n == (T[j, z] + k * T[i, j]) % n)
    crit_c = np.all((T[z, i] + k * T[j, z]) % n == (k * i + T[i, j]) % n) and k_square
    crit_d = (t.is_idempotent() and check_identity(t, IdentityId.Medial)
              and k_square)
    return QuadraticalCriteria(class_holds(t, QClass.Quadratical), bool(crit_b),
                               bool(crit_c), bool(crit_d))


def quadratical_equivalents(t, k):
    """
    Evaluates, on a k-translatable quasigroup, the conditions

    (a) quadratical;
    (b) right distributive and k² = -1;
    (c) right distributive and alterable;
    (d) left distributive and alterable.
    """
    _require_translatable_quasigroup(t, k)
    from .classes import QClass, class_holds

    n = t.n
    k_square = (k * k + 1) % n == 0
    right = check_identity(t, IdentityId.RightDistributive)
    left = check_identity(t, IdentityId.LeftDistributive)
    alterable = check_identity(t, IdentityId.Alterable)
    return QuadraticalCriteria(class_holds(t, QClass.Quadratical),
                               right and k_square, right and alterable,
                               left and alterable)
