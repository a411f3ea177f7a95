"""
Reduction of the bottom coefficient c_{2-w} to products of odd zeta values.

S(M,N) and T(M,N) are the depth-two combinations whose reductions are known
in closed form. Rewriting the double zeta values of c_{2-w} through S leaves
the remainder sum_n X_n zeta(2w-2n-2, 2n), conjectured to vanish term by term.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial
from typing import Dict, List, Tuple

from ..algebra import SymbolicConstant, zeta_product
from ..exact import binom, euler_at_zero
from ..utils.errors import (
    ConjectureViolation,
    DomainError,
    ResidualPiPowerError,
    ZetaOneError,
)
from .theorem1 import _triple, coeff_c0_bottom

logger = logging.getLogger(__name__)


# Lemma-type building blocks

def phi_coeff(l: int) -> Fraction:
    """phi_l = -(2l+2) E_{2l+1}(0), always an integer"""
    if l < 0:
        raise DomainError(f"phi index must be nonnegative, got {l}")
    value = -(2 * l + 2) * euler_at_zero(2 * l + 1)
    if value.denominator != 1:
        raise ConjectureViolation(f"phi_{l} = {value} is not an integer")
    return value


def _st_coeff(M: int, l: int) -> Fraction:
    """phi_l Gamma(2M+2l) / ((2l+2)! Gamma(2M-1))"""
    return phi_coeff(l) * Fraction(
        factorial(2 * M + 2 * l - 1), factorial(2 * l + 2) * factorial(2 * M - 2)
    )


def _check_mn(M: int, N: int, min_n: int = 0):
    if M < 2 or N < min_n:
        raise DomainError(f"need M >= 2 and N >= {min_n}, got ({M},{N})")


def S_value(M: int, N: int) -> SymbolicConstant:
    """zeta(2M-1, 2N+1) + sum_l c_l zeta(2M+2l, 2N-2l), unreduced"""
    _check_mn(M, N)
    result = SymbolicConstant.double_zeta(2 * M - 1, 2 * N + 1)
    for l in range(N):
        result = result + SymbolicConstant.double_zeta(2 * M + 2 * l, 2 * N - 2 * l) * _st_coeff(M, l)
    return result


def T_value(M: int, N: int) -> SymbolicConstant:
    """zeta(2N+1, 2M-1) + sum_l c_l zeta(2N-2l, 2M+2l), unreduced"""
    _check_mn(M, N, min_n=1)
    result = SymbolicConstant.double_zeta(2 * N + 1, 2 * M - 1)
    for l in range(N):
        result = result + SymbolicConstant.double_zeta(2 * N - 2 * l, 2 * M + 2 * l) * _st_coeff(M, l)
    return result


@lru_cache(maxsize=None)
def S_reduce_N0(M: int) -> SymbolicConstant:
    """S(M,0) = zeta(2M-1, 1) through single zeta values"""
    _check_mn(M, 0)
    result = SymbolicConstant.zeta(2 * M) * Fraction(2 * M - 1, 2)
    for j in range(1, 2 * M - 2):
        result = result - zeta_product(j + 1, 2 * M - 1 - j) * Fraction(1, 2)
    return result


def f_alpha(alpha: int, M: int, N: int) -> Fraction:
    """Coefficient f_alpha(M,N) of zeta(alpha) zeta(2M+2N-alpha) in 2 T(M,N)"""
    total = Fraction(0)
    for n in range(2 * N):
        total += euler_at_zero(n) * binom(alpha - 1, 2 * N - n) * binom(2 * M + n - 2, n)
    return total if alpha % 2 == 1 else -total


def f_table(M: int, N: int) -> Dict[int, Fraction]:
    """f_alpha(M,N) for 1 <= alpha <= 2M+2N-1"""
    return {alpha: f_alpha(alpha, M, N) for alpha in range(1, 2 * M + 2 * N)}


def tilde_f_residuals(N: int) -> List[Fraction]:
    """
    sum_{l<=p} phi_l/(2l+2) C(2p+2, 2l+1) - 1 for p = 0..N-1

    Every entry vanishes when T(M,N) reduces to products of single zetas.
    """
    residuals = []
    for p in range(N):
        total = sum(
            (phi_coeff(l) / (2 * l + 2) * binom(2 * p + 2, 2 * l + 1) for l in range(p + 1)),
            Fraction(0),
        )
        residuals.append(total - 1)
    return residuals


@lru_cache(maxsize=None)
def T_reduce(M: int, N: int) -> SymbolicConstant:
    """T(M,N) as sum_alpha f_alpha/2 zeta(alpha) zeta(2M+2N-alpha)"""
    _check_mn(M, N, min_n=1)
    total_weight = 2 * M + 2 * N
    result = SymbolicConstant.zero()
    for alpha in range(2, total_weight - 1):
        coeff = f_alpha(alpha, M, N) / 2
        if coeff:
            result = result + zeta_product(alpha, total_weight - alpha) * coeff
    return result


def lemma_sum_rhs(M: int, N: int) -> SymbolicConstant:
    """Right side of S(M,N) + T(M,N) in single zeta values"""
    _check_mn(M, N, min_n=1)
    result = zeta_product(2 * M - 1, 2 * N + 1) - SymbolicConstant.zeta(2 * M + 2 * N)
    for l in range(N):
        result = result + (
            zeta_product(2 * M + 2 * l, 2 * N - 2 * l) - SymbolicConstant.zeta(2 * M + 2 * N)
        ) * _st_coeff(M, l)
    return result


@lru_cache(maxsize=None)
def S_reduce(M: int, N: int) -> SymbolicConstant:
    """S(M,N) through single zeta values"""
    if N == 0:
        return S_reduce_N0(M)
    return lemma_sum_rhs(M, N) - T_reduce(M, N)


# Conjectural decomposition

def Z_alpha(alpha: int, a1: int, a2: int, a3: int) -> int:
    """Bounded double-binomial sum Z_alpha(a1,a2,a3); zero on an empty range"""
    if alpha < 0:
        raise DomainError(f"alpha must be nonnegative, got {alpha}")
    w = a1 + a2 + a3
    total = 0
    for k in range(max(1, 2 * alpha + 2 - a1), min(a1, 2 * alpha + 1) + 1):
        total += (
            binom(a1 + a3 - k - 1, a3 - 1)
            * binom(a1 + a3 - 2 * alpha + k - 3, a3 - 1)
            * binom(2 * alpha, k - 1)
            * binom(2 * w - 2 * alpha - 4, w - k - 1)
        )
    return total


def _x_half(n: int, a1: int, a2: int, a3: int) -> Fraction:
    w = a1 + a2 + a3
    total = Fraction(0)
    for l in range(n, a1):
        total += (
            euler_at_zero(2 * l - 2 * n + 1)
            * Z_alpha(l, a1, a2, a3)
            * binom(2 * w - 2 * n - 3, 2 * w - 2 * l - 4)
        )
    for k in range(max(1, 2 * n - a1 + 1), min(a1, 2 * n) + 1):
        total += (
            binom(a1 + a2 - k - 1, a2 - 1)
            * binom(a1 + a2 - 2 * n + k - 2, a2 - 1)
            * binom(2 * n - 1, k - 1)
            * binom(2 * w - 2 * n - 3, w - k - 1)
        )
    return total


def X_value(n: int, a1: int, a2: int, a3: int) -> Fraction:
    """X_n(a1,a2,a3), symmetrized in a2 <-> a3; conjectured to vanish"""
    if n < 1 or n > a1 - 1:
        raise DomainError(f"X_n needs 1 <= n <= a1-1, got n={n}, a1={a1}")
    return _x_half(n, a1, a2, a3) + _x_half(n, a1, a3, a2)


def _x_half_shifted(m: int, a1: int, a2: int, a3: int) -> Fraction:
    total = Fraction(0)
    for k in range(a1):
        for l in range(a1):
            index = 2 * m - k - l - 1
            if index < 0:
                continue
            total += (
                euler_at_zero(index)
                * binom(a2 - 1 + k, k)
                * binom(a2 - 1 + l, l)
                * binom(2 * a1 - k - l - 2, a1 - k - 1)
                * binom(2 * a2 + 2 * a3 + k + l - 2, a2 + a3 + k - 1)
                * binom(2 * a2 + 2 * a3 + 2 * m - 3, index)
            )
    return total


def X_value_shifted(n: int, a1: int, a2: int, a3: int) -> Fraction:
    """X_n from the form summed after the change of variables n -> a1 - n"""
    if n < 1 or n > a1 - 1:
        raise DomainError(f"X_n needs 1 <= n <= a1-1, got n={n}, a1={a1}")
    m = a1 - n
    return _x_half_shifted(m, a1, a2, a3) + _x_half_shifted(m, a1, a3, a2)


@dataclass(frozen=True)
class OddPairDecomposition:
    """
    c_{2-w} = sum_k gamma_k/2 zeta(2k+1) zeta(2w-2k-3), k = 1..w-2

    gamma holds the raw vector; folded groups gamma_k with its reflection
    gamma_{w-2-k} into the observable coefficient of each unordered pair.
    """

    w: int
    gamma: Tuple[Fraction, ...]
    source: str = "reduction"

    @property
    def weight(self) -> int:
        return 2 * self.w - 2

    @property
    def entries(self) -> Dict[int, Fraction]:
        return {k: g for k, g in enumerate(self.gamma, start=1)}

    @property
    def integral(self) -> bool:
        return all(Fraction(g).denominator == 1 for g in self.gamma)

    @property
    def folded(self) -> Dict[Tuple[int, int], Fraction]:
        pairs: Dict[Tuple[int, int], Fraction] = {}
        for k, g in self.entries.items():
            p, q = 2 * k + 1, 2 * self.w - 2 * k - 3
            if q == 1:
                if g != 0:
                    raise ZetaOneError(f"gamma_{k} = {g} pairs with zeta(1)")
                continue
            key = (min(p, q), max(p, q))
            pairs[key] = pairs.get(key, Fraction(0)) + Fraction(g) / 2
        return {key: c for key, c in sorted(pairs.items()) if c != 0}

    def to_constant(self) -> SymbolicConstant:
        result = SymbolicConstant.zero()
        for (p, q), c in self.folded.items():
            result = result + zeta_product(p, q) * c
        return result

    @classmethod
    def from_constant(cls, c: SymbolicConstant, w: int,
                      source: str = "reduction") -> "OddPairDecomposition":
        """Read off gamma from a constant made only of zeta(p) zeta(q), p + q = 2w-2"""
        gamma = [Fraction(0)] * (w - 2)
        for mono, coeff in c.items():
            if mono.pi_power or mono.double or len(mono.odd) != 2 or sum(mono.odd) != 2 * w - 2:
                raise DomainError(f"term {mono} is not an odd-pair product of weight {2 * w - 2}")
            p = min(mono.odd)
            gamma[(p - 1) // 2 - 1] += 2 * coeff
        return cls(w, tuple(gamma), source)


def _q_coeff(alpha: int, k: int, w: int) -> Fraction:
    total = Fraction(0)
    for n in range(2 * alpha):
        total += euler_at_zero(n) * binom(2 * k, 2 * alpha - n) * binom(2 * w - 2 * alpha + n - 4, n)
    return total


def gamma_coeffs(a1: int, a2: int, a3: int, printed: bool = False) -> OddPairDecomposition:
    """
    gamma_k, 1 <= k <= w-2, summed over the six orderings

    The default normalization reconstructs c_{2-w} through sum gamma_k/2 zeta zeta
    and vanishes on the zeta(1) slot k = w-2. printed=True evaluates the
    uncorrected expression, kept for comparison only.
    """
    a1, a2, a3 = _triple(a1, a2, a3)
    w = a1 + a2 + a3
    gamma = []
    for k in range(1, w - 1):
        total = Fraction(0)
        for b1, b2, b3 in permutations((a1, a2, a3)):
            z0 = Z_alpha(0, b1, b2, b3)
            zk = Z_alpha(k, b1, b2, b3) if b1 - 1 - k >= 0 else 0
            if printed:
                total += 2 * zk - z0
                total += sum(
                    (Z_alpha(al, b1, b2, b3) * _q_coeff(al, k, w) for al in range(1, b1)),
                    Fraction(0),
                )
                continue
            total += 4 * zk
            if k <= w - 3:
                total -= 2 * z0
                total -= 2 * sum(
                    (Z_alpha(al, b1, b2, b3) * _q_coeff(al, k, w) for al in range(1, b1)),
                    Fraction(0),
                )
        gamma.append(total)
    result = OddPairDecomposition(w, tuple(gamma), "printed" if printed else "conjecture")
    if not printed and gamma and gamma[-1] != 0:
        raise ZetaOneError(f"gamma_{w - 2} = {gamma[-1]} pairs with zeta(1)")
    if not result.integral:
        logger.warning(f"Non-integer gamma for C_{{{a1},{a2},{a3}}}: {result.gamma}")
    return result


def c_bottom_reduced(a1: int, a2: int, a3: int) -> OddPairDecomposition:
    """
    c_{2-w} = c0 (-1)^w zeta(2w-2) + 2 sum_sigma sum_n Z_n S(w-1-n, n),
    reduced to odd-pair products

    Raises ConjectureViolation if some X_n is nonzero and
    ResidualPiPowerError if the pi^(2w-2) part does not cancel.
    """
    a1, a2, a3 = _triple(a1, a2, a3)
    w = a1 + a2 + a3
    total = SymbolicConstant.zeta(2 * w - 2) * ((-1) ** w * coeff_c0_bottom(a1, a2, a3))
    for b1, b2, b3 in permutations((a1, a2, a3)):
        for n in range(b1):
            zn = Z_alpha(n, b1, b2, b3)
            if zn:
                total = total + S_reduce(w - 1 - n, n) * (2 * zn)
        for n in range(1, b1):
            x = X_value(n, b1, b2, b3)
            if x != 0:
                raise ConjectureViolation(f"X_{n}({b1},{b2},{b3}) = {x}")

    residual = total.pure_pi_part()
    if residual:
        raise ResidualPiPowerError(
            f"C_{{{a1},{a2},{a3}}}: pi-power part {residual!r} does not cancel"
        )
    return OddPairDecomposition.from_constant(total, w)
