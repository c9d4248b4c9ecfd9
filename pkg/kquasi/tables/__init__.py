# Explicit Cayley tables: construction, laws and translatability
from .cayley_table import (CayleyTable, cyclic_reorder, dual, from_rows,
                           from_translatable_sequence)
from .identities import (IDENTITIES, Identity, IdentityId, check_identity,
                         check_law, holds_linear)
from .properties import (QuadraticalCriteria, TranslatabilityReport,
                         is_k_translatable, is_left_cancellative, is_quasigroup,
                         is_right_cancellative, quadratical_criteria,
                         quadratical_equivalents, translatability)
from .classes import (CLASS_LAWS, QUADRATICAL_LAWS, QClass, class_holds,
                      quadratical_laws, table_classes)
