import enum

from .identities import IdentityId, check_identity
from .properties import is_quasigroup


class QClass(enum.Enum):
    Quadratical = 'quadratical'
    Hexagonal = 'hexagonal'
    GS = 'gs'
    RightModular = 'right_modular'
    LeftModular = 'left_modular'
    Stein = 'stein'
    ARO = 'aro'
    C3 = 'c3'


# Laws that, on a quasigroup, define each class
CLASS_LAWS = {
    QClass.Quadratical: (IdentityId.PropertyA,),
    QClass.Hexagonal: (IdentityId.Idempotent, IdentityId.Hexagonal, IdentityId.Medial),
    QClass.GS: (IdentityId.Idempotent, IdentityId.GS1),
    QClass.RightModular: (IdentityId.RightModular,),
    QClass.LeftModular: (IdentityId.LeftModular,),
    QClass.Stein: (IdentityId.Stein,),
    QClass.ARO: (IdentityId.Idempotent, IdentityId.ARO, IdentityId.Medial),
    QClass.C3: (IdentityId.Idempotent, IdentityId.C3),
}


def class_holds(t, cls):
    """Table-level membership of ``t`` in ``cls`` (always ``False`` off quasigroups)."""
    if not is_quasigroup(t):
        return False
    # Cheap laws first; medial is the only quartic check
    return all(check_identity(t, law) for law in CLASS_LAWS[QClass(cls)])


def table_classes(t):
    return {cls for cls in QClass if class_holds(t, cls)}


# Laws every quadratical quasigroup satisfies
QUADRATICAL_LAWS = (
    IdentityId.Idempotent, IdentityId.Elastic, IdentityId.StrongElastic,
    IdentityId.Bookend, IdentityId.LeftDistributive, IdentityId.RightDistributive,
    IdentityId.Medial, IdentityId.FlexLeft, IdentityId.FlexRight, IdentityId.Alterable,
)


def quadratical_laws(t):
    """Which of ``QUADRATICAL_LAWS`` hold in ``t``, in catalogue order."""
    return {law: check_identity(t, law) for law in QUADRATICAL_LAWS}
