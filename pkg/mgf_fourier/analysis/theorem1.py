"""
Laurent polynomial of the constant Fourier mode of C_{a1,a2,a3}.

Coefficients are produced exactly. The zeta(2k+1) tower is computed by the
summed partial-fraction route and, independently, by the theta-gated closed
form; both are exposed so that tests can compare them.

Conventions: u = 4y = 4 pi tau2, w = a1 + a2 + a3, and

    L = c_w (-u)^w + sum_k c_{w-2k-1} zeta(2k+1) u^(w-2k-1) + c_{2-w} u^(2-w)
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import comb, factorial
from typing import Dict, Iterable, Mapping, Optional, Tuple, Union

from ..algebra import LaurentPolynomial, SymbolicConstant, Variable
from ..exact import GraphIndex, bernoulli, binom, zeta_even_pi_power
from ..utils.errors import CrossCheckError, DomainError, ZetaOneError

logger = logging.getLogger(__name__)

Triple = Tuple[int, int, int]


def _triple(a1: int, a2: int, a3: int) -> Triple:
    return GraphIndex.of(a1, a2, a3).require_laurent_domain()


def _orderings(a1: int, a2: int, a3: int) -> Iterable[Triple]:
    """All six orderings, repeated exponents counted with multiplicity"""
    return permutations((a1, a2, a3))


# partial fractions and g-coefficients

def pf_A(k: int, a: int, b: int) -> int:
    """Coefficient of 1/((z+x)^k (y-x)^(a+b-k)); zero outside 1 <= k <= a"""
    if a < 1 or b < 1:
        raise DomainError(f"partial fractions need a, b >= 1, got ({a},{b})")
    if k < 1 or k > a:
        return 0
    return (-1) ** (a + k) * binom(a + b - k - 1, a - k)


def pf_B(k: int, a: int, b: int) -> int:
    """Coefficient of 1/((z+y)^k (y-x)^(a+b-k)); zero outside 1 <= k <= b"""
    if a < 1 or b < 1:
        raise DomainError(f"partial fractions need a, b >= 1, got ({a},{b})")
    if k < 1 or k > b:
        return 0
    return (-1) ** a * binom(a + b - k - 1, b - k)


@dataclass(frozen=True)
class PartialFractionCoeffs:
    """A_k(a,b) and B_k(a,b) for one exponent pair"""

    a: int
    b: int
    A: Tuple[int, ...]
    B: Tuple[int, ...]

    @classmethod
    def build(cls, a: int, b: int) -> "PartialFractionCoeffs":
        return cls(
            a, b,
            tuple(pf_A(k, a, b) for k in range(1, a + 1)),
            tuple(pf_B(k, a, b) for k in range(1, b + 1)),
        )

    def evaluate(self, x: Fraction, y: Fraction, z: Fraction) -> Fraction:
        """Right side of the decomposition of 1/((z+x)^a (z+y)^b)"""
        d = Fraction(y) - Fraction(x)
        total = Fraction(0)
        for k, coeff in enumerate(self.A, start=1):
            total += Fraction(coeff) / ((z + x) ** k * d ** (self.a + self.b - k))
        for k, coeff in enumerate(self.B, start=1):
            total += Fraction(coeff) / ((z + y) ** k * d ** (self.a + self.b - k))
        return total


def g_coeff(a1: int, a2: int, alpha: int, beta: int) -> int:
    """g_{a1,a2}(alpha, beta) of the residue form of the G-function"""
    if a1 < 1 or a2 < 1:
        raise DomainError(f"g-coefficients need a1, a2 >= 1, got ({a1},{a2})")
    if alpha < 0 or beta < 0:
        raise DomainError(f"g-coefficients need alpha, beta >= 0, got ({alpha},{beta})")
    return (
        (-1) ** a1
        * binom(2 * a1 - 2 - alpha - beta, a1 - 1)
        * binom(a2 + alpha - 1, a2 - 1)
        * binom(a2 + beta - 1, a2 - 1)
    )


@lru_cache(maxsize=None)
def g_table(a1: int, a2: int) -> Dict[Tuple[int, int], int]:
    """Nonzero g_{a1,a2}(alpha, beta) over alpha + beta <= a1 - 1"""
    table = {}
    for alpha in range(a1):
        for beta in range(a1 - alpha):
            value = g_coeff(a1, a2, alpha, beta)
            if value:
                table[(alpha, beta)] = value
    return table


# coefficient c_w

def coeff_top(a1: int, a2: int, a3: int) -> Fraction:
    """c_w; (-4)^w c_w is the coefficient of y^w"""
    a1, a2, a3 = _triple(a1, a2, a3)
    w = a1 + a2 + a3

    def half(p: int, q: int) -> Fraction:
        total = Fraction(0)
        for k in range(p + 1):
            weight = bernoulli(2 * k) * bernoulli(2 * w - 2 * k) / (
                factorial(2 * k) * factorial(2 * w - 2 * k)
            )
            # Gamma(2p+2q-2k) / (Gamma(2q) Gamma(2p-2k+1))
            ratio = Fraction(
                factorial(2 * p + 2 * q - 2 * k - 1),
                factorial(2 * q - 1) * factorial(2 * p - 2 * k),
            )
            total += weight * ratio
        return total

    return half(a2, a3) + half(a3, a2)


# zeta tower, summed partial-fraction route

def _kl_terms(order: Triple):
    """Yield (g, a, b) over the (alpha, beta) range of one ordering"""
    b1, b2, b3 = order
    for (alpha, beta), g in g_table(b1, b2).items():
        yield g, b2 + 2 * b3 + beta, b2 + alpha


def _kl_tower_coefficient(order: Triple, w: int, j: int) -> Fraction:
    """Coefficient of zeta(2w-1-2j) u^(2j+1-w) from one ordering"""
    total = Fraction(0)
    sign = -1 if w % 2 == 0 else 1
    for g, a, b in _kl_terms(order):
        if j == 0:
            total += 2 * g * sign * (-1) ** a * binom(a + b - 1, a)
        else:
            # zeta(2j)/(2 pi)^(2j); (-1)^(w-1-2j) = (-1)^(w-1)
            reduced = zeta_even_pi_power(j) / 4 ** j
            total += -4 * (-1) ** j * reduced * pf_A(2 * j, a, b) * sign * g
    return total


def _kl_c0_contribution(order: Triple) -> int:
    total = 0
    for g, a, b in _kl_terms(order):
        total += g * pf_B(1, a, b)
    return total


def coeff_zeta(a1: int, a2: int, a3: int, k: int) -> Fraction:
    """c_{w-2k-1}, the coefficient of zeta(2k+1) u^(w-2k-1), 1 <= k <= w-1"""
    a1, a2, a3 = _triple(a1, a2, a3)
    w = a1 + a2 + a3
    if k < 1 or k > w - 1:
        raise DomainError(f"zeta tower index must satisfy 1 <= k <= {w - 1}, got {k}")
    j = w - 1 - k
    return sum(
        (_kl_tower_coefficient(order, w, j) for order in _orderings(a1, a2, a3)),
        Fraction(0),
    )


def coeff_zeta_theta(a1: int, a2: int, a3: int, k: int) -> Fraction:
    """c_{w-2k-1} from the theta-gated closed form"""
    a1, a2, a3 = _triple(a1, a2, a3)
    w = a1 + a2 + a3
    if k < 1 or k > w - 1:
        raise DomainError(f"zeta tower index must satisfy 1 <= k <= {w - 1}, got {k}")
    prefactor = 2 * bernoulli(2 * w - 2 * k - 2) / factorial(2 * w - 2 * k - 2)
    total = Fraction(0)
    for b1, b2, b3 in _orderings(a1, a2, a3):
        for (alpha, beta), g in g_table(b1, b2).items():
            if b3 + (b2 + beta) // 2 - w + k + 1 < 0:
                continue
            total += (
                (-1) ** (b1 + b3 + beta + 1)
                * g
                * binom(2 * k - 2 * b1 + alpha + beta + 1, b2 + alpha - 1)
            )
    return prefactor * total


def kl_laurent_part(a1: int, a2: int, a3: int) -> LaurentPolynomial:
    """
    zeta(2k+1) tower plus the zeta(2w-2) u^(2-w) piece, summed over the six
    orderings of the partial-fraction route
    """
    a1, a2, a3 = _triple(a1, a2, a3)
    w = a1 + a2 + a3
    coeffs: Dict[int, SymbolicConstant] = {}
    for j in range(0, w):
        value = sum(
            (_kl_tower_coefficient(order, w, j) for order in _orderings(a1, a2, a3)),
            Fraction(0),
        )
        n = 2 * w - 1 - 2 * j
        if n == 1:
            if value != 0:
                raise ZetaOneError(
                    f"C_{{{a1},{a2},{a3}}}: zeta(1) term with coefficient {value}"
                )
            continue
        if value:
            coeffs[2 * j + 1 - w] = SymbolicConstant.zeta(n) * value
    c0 = sum(_kl_c0_contribution(order) for order in _orderings(a1, a2, a3))
    coeffs[2 - w] = SymbolicConstant.zeta(2 * w - 2) * ((-1) ** (w - 2) * c0)
    return LaurentPolynomial(coeffs, Variable.U, w)


# coefficient c_{2-w}

def coeff_c0_bottom(a1: int, a2: int, a3: int, printed: bool = False) -> int:
    """
    Integer c0 multiplying (-1)^w zeta(2w-2) in c_{2-w}

    The default sums B_1 coefficients over all six orderings. printed=True
    gives the single-ordering variant with binomial top 2a2+2a3+alpha+beta,
    kept for comparison only; it does not reproduce the known tables.
    """
    a1, a2, a3 = _triple(a1, a2, a3)
    if printed:
        return sum(
            (-1) ** (a2 + beta) * g * binom(2 * a2 + 2 * a3 + alpha + beta, a2 + alpha - 1)
            for (alpha, beta), g in g_table(a1, a2).items()
        )
    total = 0
    for b1, b2, b3 in _orderings(a1, a2, a3):
        for (alpha, beta), g in g_table(b1, b2).items():
            total += (
                (-1) ** (b2 + beta)
                * g
                * binom(2 * b2 + 2 * b3 + alpha + beta - 2, b2 + alpha - 1)
            )
    return total


def double_zeta_Z(a1: int, a2: int, a3: int) -> SymbolicConstant:
    """Z(a1,a2,a3): integer combination of zeta(2w-k-l-1, k+l-1)"""
    for a in (a1, a2, a3):
        if a < 1:
            raise DomainError(f"exponents must be positive, got ({a1},{a2},{a3})")
    w = a1 + a2 + a3
    terms: Dict[Tuple[int, int], int] = {}
    for k in range(1, a1 + 1):
        for l in range(1, a1 + 1):
            coeff = (
                binom(a1 + a2 - k - 1, a2 - 1)
                * binom(a1 + a2 - l - 1, a2 - 1)
                * binom(k + l - 2, k - 1)
                * binom(2 * w - k - l - 2, w - k - 1)
            )
            if coeff:
                pair = (2 * w - k - l - 1, k + l - 1)
                terms[pair] = terms.get(pair, 0) + coeff
    result = SymbolicConstant.zero()
    for (a, b), coeff in sorted(terms.items()):
        result = result + SymbolicConstant.double_zeta(a, b) * coeff
    return result


def coeff_bottom(a1: int, a2: int, a3: int) -> SymbolicConstant:
    """c_{2-w} over double-zeta symbols and pi^(2w-2), unreduced"""
    a1, a2, a3 = _triple(a1, a2, a3)
    w = a1 + a2 + a3
    c0 = coeff_c0_bottom(a1, a2, a3)
    result = SymbolicConstant.zeta(2 * w - 2) * ((-1) ** w * c0)
    for order in _orderings(a1, a2, a3):
        result = result + double_zeta_Z(*order) * 2
    return result


# assembly

def laurent(a1: int, a2: int, a3: int, reduced: bool = True,
            cross_check: bool = False) -> LaurentPolynomial:
    """
    Laurent polynomial of the constant mode of C_{a1,a2,a3} in u = 4y

    Args:
        reduced: Express c_{2-w} through products of odd zeta values
            (otherwise keep the double-zeta symbols)
        cross_check: Recompute the zeta tower by the theta-gated formula and
            raise CrossCheckError on any disagreement
    """
    a1, a2, a3 = _triple(a1, a2, a3)
    w = a1 + a2 + a3
    coeffs: Dict[int, SymbolicConstant] = {
        w: SymbolicConstant.rational(coeff_top(a1, a2, a3) * (-1) ** w)
    }
    for k in range(1, w):
        c = coeff_zeta(a1, a2, a3, k)
        if cross_check:
            other = coeff_zeta_theta(a1, a2, a3, k)
            if other != c:
                raise CrossCheckError(
                    f"zeta({2 * k + 1}) coefficient of C_{{{a1},{a2},{a3}}}: "
                    f"{c} (partial fractions) != {other} (theta form)"
                )
        if c:
            coeffs[w - 2 * k - 1] = SymbolicConstant.zeta(2 * k + 1) * c

    if reduced:
        from .decomposition import c_bottom_reduced

        bottom = c_bottom_reduced(a1, a2, a3).to_constant()
    else:
        bottom = coeff_bottom(a1, a2, a3)
    coeffs[2 - w] = coeffs.get(2 - w, SymbolicConstant.zero()) + bottom
    logger.debug(f"Assembled Laurent polynomial of C_{{{a1},{a2},{a3}}} (w={w})")
    return LaurentPolynomial(coeffs, Variable.U, w)


def eisenstein_laurent(w: int) -> LaurentPolynomial:
    """Two-term Laurent polynomial of E_w in u"""
    if w < 2:
        raise DomainError(f"Eisenstein series need w >= 2, got {w}")
    top = -bernoulli(2 * w) / factorial(2 * w) * (-1) ** w
    bottom = Fraction(4 * factorial(2 * w - 3), factorial(w - 2) * factorial(w - 1))
    return LaurentPolynomial(
        {
            w: SymbolicConstant.rational(top),
            1 - w: SymbolicConstant.zeta(2 * w - 1) * bottom,
        },
        Variable.U,
        w,
    )


Term = Union[Tuple[int, int, int], int, str]


def laurent_combination(terms: Mapping[Term, Union[int, Fraction]],
                        constant: Optional[SymbolicConstant] = None) -> LaurentPolynomial:
    """
    Laurent polynomial of sum_t q_t F_t + constant

    Keys are exponent triples for C_{a1,a2,a3} or integers w for E_w.
    """
    total = LaurentPolynomial({}, Variable.U)
    for key, q in terms.items():
        if isinstance(key, tuple):
            part = laurent(*key)
        elif isinstance(key, int):
            part = eisenstein_laurent(key)
        else:
            raise DomainError(f"unknown combination term {key!r}")
        total = total + part.scaled(Fraction(q))
    if constant is not None:
        total = total + LaurentPolynomial({0: constant}, Variable.U)
    return total


def is_cusp_candidate(p: LaurentPolynomial) -> bool:
    """A combination whose Laurent polynomial vanishes identically"""
    return p.is_zero
