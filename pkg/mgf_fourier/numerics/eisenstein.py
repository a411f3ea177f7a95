"""
Non-holomorphic Eisenstein series E_w from their Fourier expansion
"""

from fractions import Fraction
from math import factorial
from numbers import Rational

import mpmath as mp

from ..analysis.theorem1 import eisenstein_laurent
from ..exact.arithmetic import divisor_sigma
from ..utils.errors import DomainError
from .types import ModulusPoint, PrecisionReal
from .zeta import GUARD_BITS, evaluate_laurent

SAFETY = 2


def p_polynomial(w: int, x):
    """P_w(x) = sum_{m<w} (w+m-1)! / (m! (w-m-1)! x^m); exact for rational x"""
    if w < 1:
        raise DomainError(f"P_w needs w >= 1, got {w}")
    if x == 0:
        raise DomainError("P_w has a pole at x = 0")
    coeffs = [
        Fraction(factorial(w + m - 1), factorial(m) * factorial(w - m - 1))
        for m in range(w)
    ]
    if isinstance(x, Rational):
        x = Fraction(x)
        return sum((c / x ** m for m, c in enumerate(coeffs)), Fraction(0))
    x = mp.mpf(x)
    return sum(mp.mpf(c.numerator) / c.denominator / x ** m for m, c in enumerate(coeffs))


def _q_term(w: int, k: int, tau: ModulusPoint) -> mp.mpf:
    """(2/(w-1)!) k^(w-1) sigma_{1-2w}(k) (q^k + qbar^k) P_w(4 k y)"""
    sigma = divisor_sigma(1 - 2 * w, k)
    q_sum = 2 * mp.exp(-2 * mp.pi * k * tau.tau2) * mp.cos(2 * mp.pi * k * tau.tau1)
    return (
        mp.mpf(2) / factorial(w - 1) * mp.mpf(k) ** (w - 1)
        * mp.mpf(sigma.numerator) / sigma.denominator
        * q_sum * p_polynomial(w, 4 * k * tau.y)
    )


def eisenstein_num(w: int, tau: ModulusPoint, terms: int = 20,
                   prec: int = 256) -> PrecisionReal:
    """
    E_w(tau) = Laurent part + first `terms` Fourier modes

    The truncation error is bounded by SAFETY times the first omitted mode
    evaluated at |cos| = 1.
    """
    if w < 2:
        raise DomainError(f"Eisenstein series need w >= 2, got {w}")
    if terms < 1:
        raise DomainError(f"need at least one Fourier term, got {terms}")
    with mp.workprec(prec + GUARD_BITS):
        laurent_part = evaluate_laurent(eisenstein_laurent(w), tau.tau2, prec)
        series = mp.fsum(_q_term(w, k, tau) for k in range(1, terms + 1))
        omitted = abs(_q_term(w, terms + 1, ModulusPoint(0.0, tau.tau2)))
        value = laurent_part.value + series
        error = laurent_part.error + SAFETY * omitted
    return PrecisionReal(value, prec, error)
