"""Exceptions raised by ``kquasi``.

Every error derives from :class:`QuasigroupError`, so callers (and the ``qg``
command) can catch the whole family at once. Shape and range problems with
user supplied tables are also :class:`ValueError`.
"""


class QuasigroupError(Exception):
    pass


class ShapeError(QuasigroupError, ValueError):
    pass


class RangeError(QuasigroupError, ValueError):
    pass


class NotAQuasigroup(QuasigroupError):
    pass


class EvenOrder(NotAQuasigroup):
    pass


class NotTranslatable(QuasigroupError):
    pass


class CriterionViolated(QuasigroupError):
    pass


class NotInvertible(QuasigroupError):
    pass


class InvalidAStructure(QuasigroupError):
    pass


class NotQuadratical(QuasigroupError):
    pass


class NotCyclic(QuasigroupError):
    pass


class OrderTooLarge(QuasigroupError):
    pass


class QQAxiomViolation(QuasigroupError):
    """A QQ-structure fails one of its axioms; ``axiom`` is the failing ``QQAxiom``."""

    def __init__(self, axiom, message: str = ''):
        self.axiom = axiom
        super().__init__(message or f'QQ axiom {axiom} does not hold')


class PropertyViolation(QuasigroupError):
    """A verified property turned out false. ``details`` is JSON-serialisable."""

    def __init__(self, message: str, details=None):
        self.details = details
        super().__init__(message)


class DiscrepancyFound(PropertyViolation):
    pass


class CounterexampleFound(PropertyViolation):
    pass
