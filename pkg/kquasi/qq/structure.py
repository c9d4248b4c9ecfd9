import enum
from dataclasses import dataclass

import numpy as np

from ..errors import NotAQuasigroup, NotCyclic, QQAxiomViolation, RangeError
from ..tables import CayleyTable, is_quasigroup
from ..utils import indent
from .astructure import AStructure, psi


class QQAxiom(enum.Enum):
    """The four conditions tying a quadratical quasigroup to its automorphism pair."""
    Shift = 'xy·λz = ρx·yz'
    Bookend = 'λx·ρx = x'
    Symmetry = 'ρ⁻¹x·λ⁻¹y = ρ⁻¹y·λ⁻¹x'
    Solvability = 'for all x, y some w has ρ⁻¹x·λ⁻¹w = y'


def _permutation(values, n, name):
    values = np.asarray(values, dtype=np.int64)
    if values.shape != (n,) or not np.array_equal(np.sort(values), np.arange(n)):
        raise RangeError(f'{name} is not a permutation of 0..{n - 1}')
    return values


def _inverse_permutation(perm):
    inv = np.empty_like(perm)
    inv[perm] = np.arange(len(perm))
    return inv


def _is_automorphism(entries, perm):
    return bool(np.array_equal(perm[entries], entries[perm[:, None], perm[None, :]]))


def translation_maps(t, s):
    """The left and right translations ``L_s(x) = s·x`` and ``R_s(x) = x·s``."""
    if not is_quasigroup(t):
        raise NotAQuasigroup('translations are only permutations in quasigroups')
    if not 0 <= s < t.n:
        raise RangeError(f'translation_maps: s={s} outside 0..{t.n - 1}')
    return t.entries[s, :].copy(), t.entries[:, s].copy()


@dataclass(frozen=True)
class QQAxiomReport:
    shift: bool
    bookend: bool
    symmetry: bool
    solvability: bool
    lam_automorphism: bool
    rho_automorphism: bool
    commuting: bool

    @property
    def axioms(self):
        return {QQAxiom.Shift: self.shift, QQAxiom.Bookend: self.bookend,
                QQAxiom.Symmetry: self.symmetry, QQAxiom.Solvability: self.solvability}

    @property
    def holds(self):
        return all(self.axioms.values())

    @property
    def first_failure(self):
        return next((axiom for axiom, ok in self.axioms.items() if not ok), None)

    def to_dict(self):
        result = {axiom.name.lower(): ok for axiom, ok in self.axioms.items()}
        result.update(lam_automorphism=self.lam_automorphism,
                      rho_automorphism=self.rho_automorphism, commuting=self.commuting)
        return result


def check_qq_axioms(table, lam, rho):
    """Exhaustively evaluates the four axioms on ``table`` with the permutations λ, ρ."""
    n = table.n
    T = table.entries
    lam = _permutation(lam, n, 'lam')
    rho = _permutation(rho, n, 'rho')
    lam_inv, rho_inv = _inverse_permutation(lam), _inverse_permutation(rho)
    x = np.arange(n).reshape(n, 1, 1)
    y = np.arange(n).reshape(1, n, 1)
    z = np.arange(n).reshape(1, 1, n)
    idx = np.arange(n)

    shift = np.array_equal(*np.broadcast_arrays(T[T[x, y], lam[z]], T[rho[x], T[y, z]]))
    bookend = np.array_equal(T[lam, rho], idx)
    # M[x, y] = ρ⁻¹x·λ⁻¹y
    M = T[rho_inv[:, None], lam_inv[None, :]]
    symmetry = np.array_equal(M, M.T)
    solvability = bool(np.all(np.sort(M, axis=1) == idx[None, :]))
    return QQAxiomReport(bool(shift), bool(bookend), bool(symmetry), solvability,
                         _is_automorphism(T, lam), _is_automorphism(T, rho),
                         bool(np.array_equal(lam[rho], rho[lam])))


class QQStructure:
    r"""

    .. qq-structure:

    QQ-structure (:monosp:`QQStructure`)
    ------------------------------------

    A candidate quadratical quasigroup together with a pair of permutations
    ``lam`` and ``rho`` meant to be commuting automorphisms of it. Nothing is
    validated on construction; ``check_axioms()`` reports which conditions
    hold and :func:`phi` refuses structures that fail any of them.

    Two constructions are provided:

    * ``QQStructure.from_astructure(astr)``: the quasigroup ``psi(astr)`` with
      the multipliers of the A-structure;
    * ``QQStructure.from_translations(t, s)``: a quasigroup with its left and
      right translations by ``s``.
    """

    def __init__(self, table, lam, rho):
        self.table = table
        self.lam = _permutation(lam, table.n, 'lam')
        self.rho = _permutation(rho, table.n, 'rho')

    @classmethod
    def from_astructure(cls, astr):
        return cls(psi(astr), astr.lam, astr.rho)

    @classmethod
    def from_translations(cls, t, s):
        lam, rho = translation_maps(t, s)
        return cls(t, lam, rho)

    @property
    def n(self):
        return self.table.n

    def check_axioms(self):
        return check_qq_axioms(self.table, self.lam, self.rho)

    def to_string(self):
        string = f"{type(self).__name__}[\n"
        string += f"  table = {indent(self.table, amount=4)},\n"
        string += f"  lam = {self.lam.tolist()},\n"
        string += f"  rho = {self.rho.tolist()}\n"
        string += "]"
        return string

    def __repr__(self):
        return self.to_string()


class GroupStructure:
    """
    The product ``x ⊙ y = ρ⁻¹x·λ⁻¹y`` recovered from a QQ-structure, with the
    same automorphism pair.
    """

    def __init__(self, table, lam, rho):
        self.table = table
        self.lam = lam
        self.rho = rho

    @property
    def n(self):
        return self.table.n

    @property
    def identity(self):
        rows = np.flatnonzero(np.all(self.table.entries == np.arange(self.n)[None, :], axis=1))
        return int(rows[0]) if len(rows) else None

    def is_commutative_group(self):
        O = self.table.entries
        n = self.n
        x = np.arange(n).reshape(n, 1, 1)
        y = np.arange(n).reshape(1, n, 1)
        z = np.arange(n).reshape(1, 1, n)
        associative = np.array_equal(*np.broadcast_arrays(O[O[x, y], z], O[x, O[y, z]]))
        return bool(associative and self.table.is_commutative()
                    and self.identity is not None and is_quasigroup(self.table))

    def check_a_axioms(self):
        O = self.table.entries
        idx = np.arange(self.n)
        lr = self.lam[self.rho]
        # ρx ⊙ λx = x and λρx ⊙ λρx = x
        return {
            'complement': bool(np.array_equal(O[self.rho, self.lam], idx)),
            'halving': bool(np.array_equal(O[lr, lr], idx)),
            'lam_automorphism': _is_automorphism(O, self.lam),
            'rho_automorphism': _is_automorphism(O, self.rho),
        }

    def to_astructure(self):
        """
        Relabels the group as ``Z_n`` along the powers of its smallest
        generator g (``g^m -> m``) and reads off the multipliers of λ and ρ.
        Raises ``NotCyclic`` when there is no identity, no generator, or the
        relabelled product is not addition mod n.
        """
        O = self.table.entries
        n = self.n
        e = self.identity
        if e is None:
            raise NotCyclic('the recovered product has no identity element')
        labels = None
        for g in range(n):
            walk = np.empty(n, dtype=np.int64)
            walk[0] = e
            for m in range(1, n):
                walk[m] = O[walk[m - 1], g]
            if len(np.unique(walk)) == n:
                labels = _inverse_permutation(walk)
                break
        if labels is None:
            raise NotCyclic('the recovered group has no generator')

        added = (labels[:, None] + labels[None, :]) % n
        if not np.array_equal(labels[O], added):
            raise NotCyclic('the generator relabelling does not turn ⊙ into addition mod n')
        g = int(walk[1]) if n > 1 else e
        l, r = int(labels[self.lam[g]]), int(labels[self.rho[g]])
        if not (np.array_equal(labels[self.lam], (l * labels) % n)
                and np.array_equal(labels[self.rho], (r * labels) % n)):
            raise NotCyclic('λ and ρ are not automorphisms of the recovered group')
        return AStructure(n, l, r)


def phi(q):
    """
    The group ``(Q, ⊙)`` of a QQ-structure. Raises ``QQAxiomViolation`` naming
    the first failing axiom.
    """
    report = q.check_axioms()
    failure = report.first_failure
    if failure is not None:
        raise QQAxiomViolation(failure, f'{failure.name} axiom ({failure.value}) does not hold')
    lam_inv, rho_inv = _inverse_permutation(q.lam), _inverse_permutation(q.rho)
    O = q.table.entries[rho_inv[:, None], lam_inv[None, :]]
    return GroupStructure(CayleyTable(O), q.lam, q.rho)


def check_p23(q):
    """
    ``c = ρx·λx`` does not depend on x, and λ, ρ are the left and right
    translations by c.
    """
    T = q.table.entries
    companions = T[q.rho, q.lam]
    if not np.all(companions == companions[0]):
        return False
    c = int(companions[0])
    return bool(np.array_equal(q.lam, T[c, :]) and np.array_equal(q.rho, T[:, c]))
