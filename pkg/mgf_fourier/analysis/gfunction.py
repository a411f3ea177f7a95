"""
The G-function: integral of (u^2+mu^2)^-a1 ((u+1)^2+mu^2)^-a2 over the real line
"""

from typing import List, Tuple

import mpmath as mp

from ..numerics.types import PrecisionReal
from ..utils.errors import DomainError, UnconvergedError
from .theorem1 import g_table


def _check(a1: int, a2: int, mu) -> None:
    if a1 < 1 or a2 < 1:
        raise DomainError(f"G-function needs a1, a2 >= 1, got ({a1},{a2})")
    if mu == 0:
        raise DomainError("G-function has a pole at mu = 0")


def G_terms(a1: int, a2: int) -> List[Tuple[int, int, int]]:
    """
    Rational-function form: (g, p, q) for each term -i pi g / ((2i mu)^p (1+2i mu)^q);
    G is the real part of twice their sum plus the same for (a2, a1)
    """
    terms = []
    for first, second in ((a1, a2), (a2, a1)):
        for (alpha, beta), g in g_table(first, second).items():
            terms.append((g, 2 * first - 1 - alpha - beta, second + alpha))
    return terms


def G_closed(a1: int, a2: int, mu, prec: int = 256) -> PrecisionReal:
    """Residue closed form; G is even in mu, the residues are taken for |mu|"""
    _check(a1, a2, mu)
    with mp.workprec(prec):
        m = abs(mp.mpf(mu))
        total = mp.mpf(0)
        for g, p, q in G_terms(a1, a2):
            term = -1j * mp.pi * g / ((2j * m) ** p * (1 + 2j * m) ** q)
            total += 2 * mp.re(term)
        return PrecisionReal(+total, prec, mp.mpf(2) ** (-prec + 8) * (1 + abs(total)))


def G_quad(a1: int, a2: int, mu, prec: int = 128, tol: float = 1e-20) -> PrecisionReal:
    """Adaptive quadrature of the defining integral"""
    _check(a1, a2, mu)
    with mp.workprec(prec):
        m2 = mp.mpf(mu) ** 2

        def integrand(u):
            return 1 / ((u * u + m2) ** a1 * ((u + 1) ** 2 + m2) ** a2)

        value, err = mp.quad(integrand, [-mp.inf, -1, -0.5, 0, mp.inf], error=True)
        if err > tol:
            raise UnconvergedError(
                f"G_{{{a1},{a2}}}({mu}) quadrature error {mp.nstr(err, 5)} > {tol}",
                estimate=value, error=err,
            )
        return PrecisionReal(value, prec, mp.mpf(err))
