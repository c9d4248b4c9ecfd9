# Groupoids induced by Z_n: x·y = (ax + by) mod n
from ..tables.classes import QClass
from .linear_groupoid import (LinearGroupoid, build, dual_k, recover_linear,
                              solve_from_k, translatable_k,
                              translatable_k_divisibility)
from .classification import (ClassificationReport, class_masks, classify,
                             commutative_instances, criterion,
                             is_quadratical_linear, k_for_class, report)
from .surveys import (PAIR_CLAIMS, NonexistenceReport, PairSurvey, SweepReport,
                      cheban_schroeder_check, class_pair_survey,
                      quadratical_orders, quadratical_orders_by_sweep,
                      verify_classification)
