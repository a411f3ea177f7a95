"""
Exact rational arithmetic and the combinatorial sequences used throughout
"""

from .arithmetic import (
    bernoulli,
    binom,
    divisor_sigma,
    euler_at_zero,
    set_table_size,
    zeta_even_pi_power,
)
from .graph import GraphIndex

__all__ = [
    "binom",
    "bernoulli",
    "euler_at_zero",
    "zeta_even_pi_power",
    "divisor_sigma",
    "set_table_size",
    "GraphIndex",
]
