"""
Laurent coefficients, their reduction, and the conjecture sweeps
"""

from .theorem1 import (
    PartialFractionCoeffs,
    coeff_bottom,
    coeff_c0_bottom,
    coeff_top,
    coeff_zeta,
    coeff_zeta_theta,
    double_zeta_Z,
    eisenstein_laurent,
    g_coeff,
    g_table,
    is_cusp_candidate,
    kl_laurent_part,
    laurent,
    laurent_combination,
    pf_A,
    pf_B,
)
from .decomposition import (
    OddPairDecomposition,
    S_reduce,
    S_reduce_N0,
    S_value,
    T_reduce,
    T_value,
    X_value,
    X_value_shifted,
    Z_alpha,
    c_bottom_reduced,
    f_alpha,
    f_table,
    gamma_coeffs,
    lemma_sum_rhs,
    phi_coeff,
    tilde_f_residuals,
)
from .differential import laplace_laurent, laplace_sources, laplace_system_residual
from .gfunction import G_closed, G_quad, G_terms
from .sweep import SweepRecord, SweepSummary, run_sweep

__all__ = [
    "pf_A",
    "pf_B",
    "PartialFractionCoeffs",
    "g_coeff",
    "g_table",
    "coeff_top",
    "coeff_zeta",
    "coeff_zeta_theta",
    "kl_laurent_part",
    "coeff_c0_bottom",
    "double_zeta_Z",
    "coeff_bottom",
    "laurent",
    "eisenstein_laurent",
    "laurent_combination",
    "is_cusp_candidate",
    "laplace_laurent",
    "laplace_sources",
    "laplace_system_residual",
    "G_closed",
    "G_quad",
    "G_terms",
    "phi_coeff",
    "S_value",
    "T_value",
    "S_reduce_N0",
    "S_reduce",
    "T_reduce",
    "lemma_sum_rhs",
    "f_alpha",
    "f_table",
    "tilde_f_residuals",
    "Z_alpha",
    "X_value",
    "X_value_shifted",
    "OddPairDecomposition",
    "gamma_coeffs",
    "c_bottom_reduced",
    "SweepRecord",
    "SweepSummary",
    "run_sweep",
]
