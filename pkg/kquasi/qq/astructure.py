from dataclasses import dataclass
from math import gcd

import numpy as np

from ..errors import InvalidAStructure
from ..tables import CayleyTable, QClass, class_holds, is_quasigroup


@dataclass(frozen=True)
class AStructure:
    r"""

    .. qq-astructure:

    A-structure (:monosp:`AStructure`)
    ----------------------------------

    The cyclic group ``(Z_n, +)`` with the automorphism pair
    ``λx = l·x`` and ``ρx = r·x`` (mod n), subject to

    * ``ρx + λx = x``, i.e. ``r + l = 1``;
    * ``λρx + λρx = x``, i.e. ``2lr = 1``.

    Every automorphism of a cyclic group is a multiplication by a unit, so
    the multipliers describe the pair completely. The second condition
    makes n odd, and ``(n + 1) / 2`` is then the unique halving constant.
    """
    n: int
    l: int
    r: int

    def is_valid(self):
        return validate_astructure(self.n, self.l, self.r)

    @property
    def lam(self):
        return (self.l * np.arange(self.n, dtype=np.int64)) % self.n

    @property
    def rho(self):
        return (self.r * np.arange(self.n, dtype=np.int64)) % self.n

    @property
    def half(self):
        return (self.n + 1) // 2

    def to_dict(self):
        return {'n': self.n, 'l': self.l, 'r': self.r}


def validate_astructure(n, l, r):
    """``True`` iff (n, l, r) satisfies every A-structure condition."""
    if n < 1 or n % 2 == 0:
        return False
    return (gcd(l % n, n) == 1 and gcd(r % n, n) == 1
            and (r + l) % n == 1 % n and (2 * l * r) % n == 1 % n)


def astructures(n):
    """Every valid A-structure on Z_n, ordered by l."""
    # r is forced to 1 - l
    return [AStructure(n, l, (1 - l) % n) for l in range(n)
            if validate_astructure(n, l, (1 - l) % n)]


def psi(astr):
    """The quasigroup ``x ⊕ y = ρx + λy`` of an A-structure."""
    if not astr.is_valid():
        raise InvalidAStructure(f'{astr} violates the A-structure conditions')
    n = astr.n
    x = np.arange(n, dtype=np.int64)
    return CayleyTable((astr.r * x[:, None] + astr.l * x[None, :]) % n)


def check_halving(astr):
    """
    ``x -> λρx + λρx`` is the identity map, and every element has exactly one
    half.
    """
    n = astr.n
    x = np.arange(n, dtype=np.int64)
    lr = astr.lam[astr.rho]
    doubling = (2 * x) % n
    return bool(np.array_equal((2 * lr) % n, x)
                and len(np.unique(doubling)) == n
                and np.array_equal((2 * ((astr.half * x) % n)) % n, x))


def check_induced_quadratical(astr):
    """``λρ = ρλ`` and ``(Z_n, ⊕)`` is a quadratical quasigroup."""
    lam, rho = astr.lam, astr.rho
    table = psi(astr)
    return bool(np.array_equal(lam[rho], rho[lam])
                and is_quasigroup(table) and class_holds(table, QClass.Quadratical))
