"""
Independent numeric oracles: lattice sums, Eisenstein series, zeta values,
special functions and finite-difference Laplace checks
"""

from .types import LatticeSumResult, ModulusPoint, PrecisionReal
from .zeta import double_zeta_num, evaluate_constant, evaluate_laurent, zeta_num
from .lattice import lattice_C, tail_model
from .eisenstein import eisenstein_num, p_polynomial
from .special import exp_part_C211, incomplete_gamma, phi_C211, phi_sm
from .modes import DecayReport, constant_mode_num, decay_rate
from .laplace import CHECKS, LaplaceResult, laplace_convergence, laplace_residual
from .identities import IDENTITIES, Identity, IdentityReport, verify_identity

__all__ = [
    "PrecisionReal",
    "ModulusPoint",
    "LatticeSumResult",
    "zeta_num",
    "double_zeta_num",
    "evaluate_constant",
    "evaluate_laurent",
    "lattice_C",
    "tail_model",
    "eisenstein_num",
    "p_polynomial",
    "incomplete_gamma",
    "phi_sm",
    "phi_C211",
    "exp_part_C211",
    "constant_mode_num",
    "decay_rate",
    "DecayReport",
    "CHECKS",
    "LaplaceResult",
    "laplace_residual",
    "laplace_convergence",
    "IDENTITIES",
    "Identity",
    "IdentityReport",
    "verify_identity",
]
