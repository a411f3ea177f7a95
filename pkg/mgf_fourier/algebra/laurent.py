"""
Laurent polynomials in the cusp variable with SymbolicConstant coefficients
"""

from enum import Enum
from fractions import Fraction
from typing import Dict, Iterator, Mapping, Optional, Tuple

from .symbols import SymbolicConstant


class Variable(str, Enum):
    """u = 4y = 4 pi tau2, y = pi tau2, or tau2 itself"""

    U = "u"
    Y = "y"
    TAU2 = "tau2"

    @property
    def scale(self) -> Tuple[int, int]:
        """(r, e) such that the variable equals r * pi^e * tau2"""
        return {"u": (4, 1), "y": (1, 1), "tau2": (1, 0)}[self.value]


class LaurentPolynomial:
    """Finite map power -> SymbolicConstant in a tagged variable"""

    __slots__ = ("_coeffs", "variable", "weight")

    def __init__(self, coefficients: Mapping[int, SymbolicConstant] = None,
                 variable: Variable = Variable.U, weight: Optional[int] = None):
        coeffs: Dict[int, SymbolicConstant] = {}
        for power, coeff in (coefficients or {}).items():
            coeff = SymbolicConstant.coerce(coeff)
            if coeff:
                coeffs[int(power)] = coeff
        self._coeffs = dict(sorted(coeffs.items(), reverse=True))
        self.variable = Variable(variable)
        self.weight = weight

    def items(self) -> Iterator[Tuple[int, SymbolicConstant]]:
        """(power, coefficient) pairs in descending power"""
        return iter(self._coeffs.items())

    def coefficient(self, power: int) -> SymbolicConstant:
        return self._coeffs.get(power, SymbolicConstant.zero())

    @property
    def powers(self) -> Tuple[int, ...]:
        return tuple(self._coeffs)

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def degree(self) -> Optional[int]:
        return max(self._coeffs) if self._coeffs else None

    @property
    def valuation(self) -> Optional[int]:
        return min(self._coeffs) if self._coeffs else None

    def _aligned(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        if other.variable != self.variable:
            other = convert_variable(other, self.variable)
        return other

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        other = self._aligned(other)
        coeffs = dict(self._coeffs)
        for power, c in other.items():
            coeffs[power] = coeffs.get(power, SymbolicConstant.zero()) + c
        weight = self.weight if self.weight == other.weight else None
        return LaurentPolynomial(coeffs, self.variable, weight)

    def __neg__(self) -> "LaurentPolynomial":
        return self.scaled(-1)

    def __sub__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return self + (-other)

    def scaled(self, factor) -> "LaurentPolynomial":
        """Multiply every coefficient by a rational or SymbolicConstant"""
        return LaurentPolynomial(
            {p: c * factor for p, c in self._coeffs.items()}, self.variable, self.weight
        )

    def __mul__(self, factor) -> "LaurentPolynomial":
        if isinstance(factor, LaurentPolynomial):
            factor = self._aligned(factor)
            coeffs: Dict[int, SymbolicConstant] = {}
            for p1, c1 in self.items():
                for p2, c2 in factor.items():
                    coeffs[p1 + p2] = coeffs.get(p1 + p2, SymbolicConstant.zero()) + c1 * c2
            return LaurentPolynomial(coeffs, self.variable)
        if isinstance(factor, (int, Fraction, SymbolicConstant)):
            return self.scaled(factor)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        if other.variable != self.variable:
            other = convert_variable(other, self.variable)
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self.variable, tuple(self._coeffs.items())))

    def __repr__(self) -> str:
        from .render import render_text

        return f"LaurentPolynomial({render_text(self)})"


def convert_variable(p: LaurentPolynomial, target) -> LaurentPolynomial:
    """
    Exact change of variable between u, y and tau2

    c * src^k = c * (r_s/r_t)^k * pi^((e_s - e_t) k) * tgt^k
    """
    target = Variable(target)
    if target == p.variable:
        return p
    r_s, e_s = p.variable.scale
    r_t, e_t = target.scale
    ratio = Fraction(r_s, r_t)
    coeffs = {}
    for power, c in p.items():
        coeffs[power] = (c * ratio ** power).scale_pi((e_s - e_t) * power)
    return LaurentPolynomial(coeffs, target, p.weight)
