"""
Rewrite rules between depth-two zeta values.

- reflection (stuffle):  zeta(s,t) + zeta(t,s) = zeta(s) zeta(t) - zeta(s+t)
- Euler:                 zeta(s,1) = (s/2) zeta(s+1) - 1/2 sum_j zeta(j+1) zeta(s-j)

Double-zeta symbols are never reduced implicitly; every rewrite here is an
explicit call.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from ..utils.errors import DomainError, ZetaOneError
from .symbols import SymbolicConstant, zeta_product


def _substitute(c: SymbolicConstant, pair: Tuple[int, int],
                replacement: SymbolicConstant) -> SymbolicConstant:
    """Replace every occurrence of the double factor zeta(pair) by replacement"""
    result = c
    while any(pair in m.double for m in result.monomials()):
        acc = SymbolicConstant.zero()
        for mono, coeff in result.items():
            if pair in mono.double:
                rest = SymbolicConstant({mono.without_double(pair): coeff})
                acc = acc + rest * replacement
            else:
                acc = acc + SymbolicConstant({mono: coeff})
        result = acc
    return result


@dataclass(frozen=True)
class ReflectionRule:
    """
    Eliminates zeta(t, s) in favour of zeta(s, t) using the reflection
    formula; for s == t it solves for zeta(s, s) outright.
    """

    s: int
    t: int

    def __post_init__(self):
        if self.s == 1 or self.t == 1:
            raise ZetaOneError(f"reflection would involve zeta(1): ({self.s},{self.t})")
        if self.s < 2 or self.t < 2:
            raise DomainError(f"reflection needs s, t >= 2, got ({self.s},{self.t})")

    @property
    def replacement(self) -> SymbolicConstant:
        s, t = self.s, self.t
        if s == t:
            return (zeta_product(s, s) - SymbolicConstant.zeta(2 * s)) * Fraction(1, 2)
        return (
            zeta_product(s, t)
            - SymbolicConstant.zeta(s + t)
            - SymbolicConstant.double_zeta(s, t)
        )

    @property
    def eliminated(self) -> Tuple[int, int]:
        return (self.t, self.s)

    def apply(self, c: SymbolicConstant) -> SymbolicConstant:
        return _substitute(c, self.eliminated, self.replacement)

    __call__ = apply


def stuffle_reflect(s: int, t: int) -> ReflectionRule:
    """The reflection rewrite rule for the pair (s, t)"""
    return ReflectionRule(s, t)


def reflect_to_canonical(c: SymbolicConstant) -> SymbolicConstant:
    """
    Apply reflection until every remaining zeta(a, b) with b >= 2 has a > b;
    zeta(s, s) symbols are solved.
    """
    result = c
    while True:
        pending = sorted(
            {(a, b) for m in result.monomials() for a, b in m.double if b >= 2 and a <= b}
        )
        if not pending:
            return result
        a, b = pending[0]
        result = ReflectionRule(b, a).apply(result)


def euler_s1_reduce(s: int) -> SymbolicConstant:
    """zeta(s, 1) in terms of single zeta values"""
    if s < 2:
        raise DomainError(f"zeta(s,1) needs s >= 2, got {s}")
    result = SymbolicConstant.zeta(s + 1) * Fraction(s, 2)
    for j in range(1, s - 1):
        result = result - zeta_product(j + 1, s - j) * Fraction(1, 2)
    return result


def rewrite_euler_s1(c: SymbolicConstant) -> SymbolicConstant:
    """Replace every zeta(s, 1) factor by its Euler reduction"""
    result = c
    pairs = sorted({(a, b) for m in c.monomials() for a, b in m.double if b == 1})
    for a, _ in pairs:
        result = _substitute(result, (a, 1), euler_s1_reduce(a))
    return result
