"""Exact polynomial KP/BKP tau functions and correlators.

Determinant (bialternant) and Pfaffian (Nimmo-ratio) evaluators for the
lattices of polynomial tau functions labelled by partitions and strict
partitions, the associated multipair/multipoint correlators, and the
brute-force free-fermion oracle that certifies every identity.
"""

from .errors import DegeneratePointsError, WindowError
from .series import (FlowVector, Poly, RSeq, complete_homogeneous, power_sums,
                     q_polynomials, rat, rat_str)
from .partitions import (FrobeniusCoords, Partition, StrictPartition,
                         content_product_bkp, content_product_kp, frobenius,
                         from_frobenius, hook_partition, strict_subpartitions,
                         subpartitions)
from .linalg import (SkewMatrix, bkp_kernel_matrix, bkp_kernel_pfaffian,
                     cauchy_block, cauchy_determinant, determinant, pfaffian,
                     pfaffian_matching_oracle, vandermonde_product)
from .polysys import (PolySystem, double_laguerre, family_rp, from_strict_upper,
                      interpolation_q, laguerre, neutral_family, system_from_json,
                      trivial, trivial_neutral)
from .tau_kp import (SchurExpansion, bialternant, expansion_rp, expansion_rp_value,
                     giambelli_check, schur_classical, skew_schur, tau_rp_value)
from .tau_bkp import (QExpansion, expansion_q, expansion_q_value, h_block,
                      nimmo_classical, nimmo_generalized, q_function_classical,
                      schur_pfaffian_analog, skew_q_classical, two_row_q)
from .correlators import (bkp_point_correlator, bkp_vev_correlator,
                          kp_correlator_vs_tau, kp_g_block, kp_pair_correlator)

__all__ = [name for name in dir() if not name.startswith("_")]
