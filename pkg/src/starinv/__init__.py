"""Exact-arithmetic generalized inverses and EP / central-EP / *-DMP
classification in finite rings with involution."""

from .classify import (ClassReport, ConditionalVerdict, Decomposition,
                       PeirceBlocks, cep_leq, cep_power, cep_product, cep_sum,
                       classify_element, decompose, is_cep, is_ep,
                       is_ep_conditional, is_star_dmp, peirce,
                       verify_partial_order)
from .errors import (BoundExceededError, InvalidArgumentError,
                     InvalidParameterError, MethodDisagreementError,
                     ParseError, PreconditionError, RingMismatchError,
                     StarInvError, UnknownIdError)
from .inverses import (InverseResult, cep_inverse, central_group_inverse,
                       core_inverse, drazin_index, drazin_inverse,
                       group_inverse, mp_inverse, pseudo_core_inverse)
from .rings import (Elem, StarRing, SubsetReport, enumerate_ring, make_gauss,
                    make_matrix_ring, make_zn, parse_elem, parse_ring_spec,
                    subset)
from .systems import (SYSTEM_NAMES, SYSTEMS, Witness, check_witness,
                      evaluate_system, solvable_left_right, solve)
from .theorems import (CLAIMS, THEOREMS, CounterexampleReport, SurveyReport,
                       TheoremReport, find_counterexamples, run_theorem,
                       survey)

__version__ = "0.1.0"
