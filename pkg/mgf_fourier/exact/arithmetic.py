"""
Binomials, Bernoulli numbers, Euler polynomial values and divisor sums.

All results are exact: integers or fractions.Fraction. Bernoulli and Euler
values come from shared immutable tables that are built once per size.
"""

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, isqrt
from typing import Tuple

from ..utils.errors import DomainError

DEFAULT_TABLE_SIZE = 256
_initial_size = DEFAULT_TABLE_SIZE


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero outside 0 <= k <= n (and for n < 0)"""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def set_table_size(size: int) -> None:
    """Initial length of the Bernoulli and Euler tables; larger indices still double it"""
    global _initial_size
    if size < 16:
        raise DomainError(f"table size must be at least 16, got {size}")
    _initial_size = size


def table_size_for(n: int) -> int:
    """Length of the shared table that holds index n"""
    size = _initial_size
    while size <= n:
        size *= 2
    return size


@lru_cache(maxsize=None)
def bernoulli_table(size: int = DEFAULT_TABLE_SIZE) -> Tuple[Fraction, ...]:
    """B_0..B_{size-1} with B_1 = -1/2, from sum_{k<=n} C(n+1,k) B_k = 0"""
    table = [Fraction(1)]
    for n in range(1, size):
        if n > 1 and n % 2 == 1:
            table.append(Fraction(0))
            continue
        acc = sum(comb(n + 1, k) * table[k] for k in range(n))
        table.append(-acc / (n + 1))
    return tuple(table)


@lru_cache(maxsize=None)
def euler_zero_table(size: int = DEFAULT_TABLE_SIZE) -> Tuple[Fraction, ...]:
    """E_0(0)..E_{size-1}(0) from the series 2/(e^x+1)"""
    # (e^x + 1) * sum E_n x^n/n! = 2 gives E_n = -1/2 sum_{k<n} C(n,k) E_k
    table = [Fraction(1)]
    for n in range(1, size):
        acc = sum(comb(n, k) * table[k] for k in range(n))
        table.append(-acc / 2)
    return tuple(table)


def bernoulli(n: int) -> Fraction:
    """Exact Bernoulli number B_n (B_1 = -1/2)"""
    if n < 0:
        raise DomainError(f"Bernoulli index must be nonnegative, got {n}")
    return bernoulli_table(table_size_for(n))[n]


def euler_at_zero(n: int) -> Fraction:
    """Exact value E_n(0) of the Euler polynomial"""
    if n < 0:
        raise DomainError(f"Euler index must be nonnegative, got {n}")
    return euler_zero_table(table_size_for(n))[n]


def zeta_even_pi_power(k: int) -> Fraction:
    """The rational r with zeta(2k) = r * pi^(2k)"""
    if k < 1:
        raise DomainError(f"zeta(2k) needs k >= 1, got {k}")
    sign = 1 if k % 2 == 1 else -1
    return sign * Fraction(2 ** (2 * k - 1)) * bernoulli(2 * k) / factorial(2 * k)


def divisor_sigma(s: int, n: int) -> Fraction:
    """sigma_s(n) = sum over divisors d of n of d^s, exact for negative s"""
    if n < 1:
        raise DomainError(f"divisor sum needs n >= 1, got {n}")
    total = Fraction(0)
    for d in range(1, isqrt(n) + 1):
        if n % d:
            continue
        e = n // d
        total += Fraction(d) ** s
        if e != d:
            total += Fraction(e) ** s
    return total
