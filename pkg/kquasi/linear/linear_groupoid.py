from dataclasses import dataclass
from math import gcd

import numpy as np

from ..errors import CriterionViolated, RangeError
from ..tables import CayleyTable
from ..utils import inverse


@dataclass(frozen=True)
class LinearGroupoid:
    """
    The groupoid ``x·y = (ax + by) mod n`` on Z_n.

    ``LinearGroupoid.idempotent(n, a)`` fixes ``b = 1 - a``.
    """
    n: int
    a: int
    b: int

    def __post_init__(self):
        if self.n < 1:
            raise RangeError(f'LinearGroupoid: order must be positive, got {self.n}')
        if not (0 <= self.a < self.n and 0 <= self.b < self.n):
            raise RangeError(
                f'LinearGroupoid: coefficients ({self.a}, {self.b}) are not reduced mod {self.n}')

    @classmethod
    def idempotent(cls, n, a):
        groupoid = cls(n, a % n, (1 - a) % n)
        assert groupoid.is_idempotent()
        return groupoid

    def is_idempotent(self):
        return (self.a + self.b) % self.n == 1 % self.n

    def is_quasigroup(self):
        return gcd(self.a, self.n) == 1 and gcd(self.b, self.n) == 1

    def table(self):
        return build(self.n, self.a, self.b)


def build(n, a, b):
    """Table of ``x·y = (ax + by) mod n``."""
    if n < 1:
        raise RangeError(f'build: order must be positive, got {n}')
    x = np.arange(n, dtype=np.int64)
    return CayleyTable((a * x[:, None] + b * x[None, :]) % n)


def solve_from_k(n, k):
    """
    The coefficients (a, b) of the idempotent k-translatable groupoid of order n:
    ``a + b = 1`` and ``a + bk = 0`` (mod n). ``None`` when ``k - 1`` is not a
    unit, in which case the system has no solution.
    """
    if not 1 <= k < n:
        raise RangeError(f'solve_from_k: k={k} outside 1..{n - 1}')
    c = inverse(k - 1, n)
    if c is None:
        return None
    b = (-c) % n
    return (1 - b) % n, b


def translatable_k(n, a, b):
    """
    The translatability value ``k = -a·b⁻¹ (mod n)`` of an idempotent linear
    groupoid, or ``None`` when b is not a unit.
    """
    if (a + b) % n != 1 % n:
        raise CriterionViolated(f'({a}, {b}) mod {n} is not idempotent: a + b != 1')
    b_inv = inverse(b, n)
    if b_inv is None:
        return None
    return (-a * b_inv) % n


def translatable_k_divisibility(n, a, b):
    """
    Every k in 1..n-1 for which the idempotent groupoid (n, a, b) is
    k-translatable: ``a + bk = 0`` and ``gcd(k, n)`` divides ``gcd(a, n)``.
    Covers idempotent groupoids that are not quasigroups.
    """
    if (a + b) % n != 1 % n:
        raise CriterionViolated(f'({a}, {b}) mod {n} is not idempotent: a + b != 1')
    return [k for k in range(1, n)
            if (a + b * k) % n == 0 and gcd(a, n) % gcd(k, n) == 0]


def dual_k(n, k):
    """The k* with ``k·k* = 1 (mod n)``: the dual is k*-translatable."""
    return inverse(k, n)


def recover_linear(t):
    """
    Reads (a, b) off an idempotent translatable table (``a = 1·0``, ``b = 0·1``)
    and returns them iff ``build(n, a, b)`` reproduces ``t``.
    """
    n = t.n
    if n == 1:
        return (0, 0)
    a = int(t(1, 0))
    b = int(t(0, 1))
    if build(n, a, b) != t:
        return None
    return a, b
