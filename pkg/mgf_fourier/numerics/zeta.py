"""
Numeric single and double zeta values, and evaluation of exact objects
"""

import logging
from functools import lru_cache

import mpmath as mp

from ..algebra.laurent import LaurentPolynomial
from ..algebra.symbols import SymbolicConstant, ZetaMonomial
from ..utils.errors import DomainError, UnconvergedError
from .types import PrecisionReal

logger = logging.getLogger(__name__)

GUARD_BITS = 16
HEAD_TERMS = 40


def _ulp(prec: int) -> mp.mpf:
    return mp.mpf(2) ** (-prec + 8)


def zeta_num(s, prec: int = 256) -> PrecisionReal:
    """Riemann zeta at real s > 1"""
    if not s > 1:
        raise DomainError(f"zeta_num needs s > 1, got {s}")
    with mp.workprec(prec + GUARD_BITS):
        value = mp.zeta(mp.mpf(s))
    return PrecisionReal(value, prec, _ulp(prec) * value)


@lru_cache(maxsize=512)
def _double_zeta(a: int, b: int, prec: int):
    tol = mp.mpf(2) ** (-prec - 8)
    with mp.workprec(prec + GUARD_BITS):
        def term(n):
            return mp.zeta(a, n + 1) / mp.mpf(n) ** b

        head = mp.fsum(term(n) for n in range(1, HEAD_TERMS))
        # Euler-Maclaurin from n = HEAD_TERMS; err covers the tail integral
        tail, err = mp.sumem(term, [HEAD_TERMS, mp.inf], tol, error=True)
    return head + tail, err + tol


def double_zeta_num(a: int, b: int, prec: int = 256) -> PrecisionReal:
    """
    zeta(a,b) = sum_{m>n>=1} m^-a n^-b as sum_n n^-b HurwitzZeta(a, n+1)

    The first HEAD_TERMS - 1 terms are summed directly and the rest by
    Euler-Maclaurin; the remainder and quadrature errors become the bound.
    """
    if a < 2 or b < 1:
        raise DomainError(f"double zeta needs a >= 2, b >= 1, got ({a},{b})")
    value, err = _double_zeta(a, b, prec)
    tol = mp.mpf(2) ** (-prec + GUARD_BITS)
    if err > tol:
        raise UnconvergedError(
            f"zeta({a},{b}) Euler-Maclaurin error {mp.nstr(err, 5)} above {mp.nstr(tol, 5)}",
            estimate=value, error=err,
        )
    return PrecisionReal(value, prec, max(err, _ulp(prec) * value))


def _monomial_value(mono: ZetaMonomial, prec: int):
    value, rel = mp.pi ** mono.pi_power, mp.mpf(0)
    for n in mono.odd:
        z = zeta_num(n, prec)
        value *= z.value
        rel += z.error / z.value
    for a, b in mono.double:
        z = double_zeta_num(a, b, prec)
        value *= z.value
        rel += z.error / z.value
    return value, rel


def evaluate_constant(c: SymbolicConstant, prec: int = 256) -> PrecisionReal:
    """Numeric value of a SymbolicConstant with a first-order error bound"""
    with mp.workprec(prec + GUARD_BITS):
        total, error = mp.mpf(0), mp.mpf(0)
        for mono, coeff in c.items():
            value, rel = _monomial_value(mono, prec)
            term = mp.mpf(coeff.numerator) / coeff.denominator * value
            total += term
            error += abs(term) * (rel + _ulp(prec))
    return PrecisionReal(total, prec, error)


def evaluate_laurent(p: LaurentPolynomial, tau2, prec: int = 256) -> PrecisionReal:
    """Value of p at the point tau2 (the variable tag fixes the scaling)"""
    if not tau2 > 0:
        raise DomainError(f"tau2 must be positive, got {tau2}")
    r, e = p.variable.scale
    with mp.workprec(prec + GUARD_BITS):
        x = r * mp.pi ** e * mp.mpf(tau2)
        total, error = mp.mpf(0), mp.mpf(0)
        for power, coeff in p.items():
            c = evaluate_constant(coeff, prec)
            total += c.value * x ** power
            error += c.error * abs(x) ** power
    return PrecisionReal(total, prec, error)
