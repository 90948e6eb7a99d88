"""Fourientation activities, the surjection phi onto spanning subgraphs, and
exact verification of the twelve-variable Tutte polynomial expansion."""
from .corpus import ACCEPTANCE_CORPUS, builtin
from .errors import InputError, InvariantViolation, SizeGuardError
from .expansions import (EdgeWeights, convolution_lambda_check, normal_identity_check, partial_specialize,
                         qconnected_check, specialize, theorem_main_lhs, theorem_main_rhs, tutte_bivariate)
from .fourientation import (Fourientation, IntrinsicActivities, intrinsic_activities, las_vergnas_sum,
                            min_in_potential_cut, min_in_potential_cycle, orientation_activities)
from .graph import (Graph, Minor, SignLabels, cyclomatic, enumerate_bonds, enumerate_circuits, is_isthmus,
                    is_loop, kappa, minor_contract, minor_delete, parse_graph, restrict)
from .phi import FullActivities, activity_toggle, full_activities, key_lemma_status, phi, phi_fibers, phi_tilde_inverse
from .poly import VARS12, Poly
from .subgraph import (CrapoInterval, HatActivities, crapo_interval, crapo_partition, gordon_traldi_sum,
                       hat_activities_dct, hat_activities_direct)

__version__ = "0.1.0"
