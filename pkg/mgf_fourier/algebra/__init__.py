"""
Symbolic coefficient ring: zeta monomials, constants and Laurent polynomials
"""

from .laurent import LaurentPolynomial, Variable, convert_variable
from .render import (
    constant_text,
    parse_json,
    render,
    render_json,
    render_latex,
    render_text,
)
from .rewrite import (
    ReflectionRule,
    euler_s1_reduce,
    reflect_to_canonical,
    rewrite_euler_s1,
    stuffle_reflect,
)
from .symbols import UNIT, SymbolicConstant, ZetaMonomial, zeta_product

__all__ = [
    "ZetaMonomial",
    "SymbolicConstant",
    "UNIT",
    "zeta_product",
    "LaurentPolynomial",
    "Variable",
    "convert_variable",
    "ReflectionRule",
    "stuffle_reflect",
    "reflect_to_canonical",
    "euler_s1_reduce",
    "rewrite_euler_s1",
    "render",
    "constant_text",
    "render_text",
    "render_latex",
    "render_json",
    "parse_json",
]
