# The five conjugates of a quasigroup and their translatability
from .conjugates import (EqualityCase, ParastropheCoeffs, ParastropheKind,
                         all_parastrophes, equality_case, parastrophe_coeffs,
                         parastrophe_table, table_partition)
from .kstar import (ALWAYS, NEVER, PARASTROPHE_TYPES, class_instances,
                    expected_type_witnesses, kstar_by_a, kstar_by_k,
                    parastrophe_type_witnesses)
from .verification import (SweepReport, hexagonal_closure, verify_closed_forms,
                           verify_equality_cases, verify_kstar_by_a,
                           verify_kstar_by_k, verify_parastrophe_types)
