# Quadratical quasigroups with automorphism pairs, and their groups
from .astructure import (AStructure, astructures, check_halving,
                         check_induced_quadratical, psi, validate_astructure)
from .structure import (GroupStructure, QQAxiom, QQAxiomReport, QQStructure,
                        check_p23, check_qq_axioms, phi, translation_maps)
from .laws import (check_exchange_laws, check_sum_equivalence,
                   is_cyclically_induced)
