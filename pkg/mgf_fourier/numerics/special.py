"""
Incomplete gamma function, the decaying solutions phi_{s,m}, and the exponential
part of the constant mode of C_{2,1,1}
"""

import mpmath as mp

from ..exact.arithmetic import divisor_sigma
from ..utils.errors import DomainError
from .types import PrecisionReal
from .zeta import GUARD_BITS

EXP_PREFACTOR = -8


def _relative(prec: int) -> mp.mpf:
    return mp.mpf(2) ** (-prec + 8)


def incomplete_gamma(a, x, prec: int = 256) -> PrecisionReal:
    """Upper incomplete gamma Gamma(a, x) for real a and x > 0"""
    if not x > 0:
        raise DomainError(f"incomplete gamma needs x > 0, got {x}")
    with mp.workprec(prec + GUARD_BITS):
        value = mp.gammainc(mp.mpf(a), mp.mpf(x))
    return PrecisionReal(value, prec, _relative(prec) * abs(value))


def phi_sm(s: int, m: int, y, prec: int = 256) -> PrecisionReal:
    """
    Decaying solution of (y^2 d^2/dy^2 - s(s-1)) phi = e^-y / y^m:

        phi = [y^(1-s) Gamma(s-1-m, y) - y^s Gamma(-s-m, y)] / (2s - 1)
    """
    if s < 1 or m < 0:
        raise DomainError(f"phi_sm needs s >= 1, m >= 0, got ({s},{m})")
    if not y > 0:
        raise DomainError(f"phi_sm needs y > 0, got {y}")
    with mp.workprec(prec + GUARD_BITS):
        y = mp.mpf(y)
        first = y ** (1 - s) * incomplete_gamma(s - 1 - m, y, prec).value
        second = y ** s * incomplete_gamma(-s - m, y, prec).value
        value = (first - second) / (2 * s - 1)
        # cancellation between the two terms costs precision at large y
        error = _relative(prec) * (abs(first) + abs(second))
    return PrecisionReal(value, prec, error)


def phi_C211(Y, prec: int = 256, closed: bool = True) -> mp.mpf:
    """Decaying solution for the source P_2(Y)^2 e^-Y; equals e^-Y / Y^2"""
    with mp.workprec(prec + GUARD_BITS):
        if closed:
            return mp.exp(-Y) / Y ** 2
        return (
            phi_sm(2, 0, Y, prec).value
            + 4 * phi_sm(2, 1, Y, prec).value
            + 4 * phi_sm(2, 2, Y, prec).value
        )


def exp_part_C211(tau2, n_max: int = 10, prec: int = 256,
                  closed: bool = True) -> PrecisionReal:
    """
    -8 sum_{n <= n_max} n^2 sigma_{-3}(n)^2 phi(4 pi tau2 n)

    The tail bound uses sigma_{-3}(n) < zeta(3) and n^2 / Y^2 = 1/(4 pi tau2)^2.
    With closed=False each phi is assembled from the phi_{2,m} building blocks.
    """
    if not tau2 > 0:
        raise DomainError(f"tau2 must be positive, got {tau2}")
    if n_max < 1:
        raise DomainError(f"need at least one term, got n_max={n_max}")
    with mp.workprec(prec + GUARD_BITS):
        base = 4 * mp.pi * mp.mpf(tau2)
        total = mp.mpf(0)
        for n in range(1, n_max + 1):
            sigma = divisor_sigma(-3, n)
            sigma = mp.mpf(sigma.numerator) / sigma.denominator
            total += n ** 2 * sigma ** 2 * phi_C211(base * n, prec, closed)
        total *= EXP_PREFACTOR
        q = mp.exp(-base)
        tail = abs(EXP_PREFACTOR) * mp.zeta(3) ** 2 / base ** 2 * q ** (n_max + 1) / (1 - q)
    return PrecisionReal(total, prec, tail + _relative(prec) * abs(total))
