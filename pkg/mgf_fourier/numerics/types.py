"""
Value types shared by the numeric oracles
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import mpmath as mp

from ..utils.errors import DomainError


@dataclass(frozen=True)
class PrecisionReal:
    """An mpf value, the binary precision it was computed at, and an error bound"""

    value: mp.mpf
    prec: int
    error: mp.mpf = mp.mpf(0)

    def __float__(self) -> float:
        return float(self.value)

    @property
    def rounding(self) -> mp.mpf:
        return mp.mpf(2) ** (-self.prec + 16) * max(1, abs(self.value))

    def agrees_with(self, other, tol=0) -> bool:
        """|a - b| <= err_a + err_b + rounding + tol"""
        if isinstance(other, PrecisionReal):
            budget = self.error + other.error + max(self.rounding, other.rounding)
            diff = abs(self.value - other.value)
        else:
            budget = self.error + self.rounding
            diff = abs(self.value - mp.mpf(other))
        return diff <= budget + tol

    def __sub__(self, other) -> "PrecisionReal":
        if isinstance(other, PrecisionReal):
            return PrecisionReal(self.value - other.value, min(self.prec, other.prec),
                                 self.error + other.error)
        return PrecisionReal(self.value - other, self.prec, self.error)

    def __add__(self, other) -> "PrecisionReal":
        if isinstance(other, PrecisionReal):
            return PrecisionReal(self.value + other.value, min(self.prec, other.prec),
                                 self.error + other.error)
        return PrecisionReal(self.value + other, self.prec, self.error)

    def __mul__(self, k) -> "PrecisionReal":
        return PrecisionReal(self.value * k, self.prec, self.error * abs(k))

    __rmul__ = __mul__

    def __str__(self) -> str:
        return f"{mp.nstr(self.value, 20)} +/- {mp.nstr(self.error, 3)}"


@dataclass(frozen=True)
class ModulusPoint:
    tau1: float
    tau2: float

    def __post_init__(self):
        if not self.tau2 > 0:
            raise DomainError(f"tau must lie in the upper half plane, got tau2={self.tau2}")

    @classmethod
    def parse(cls, text: str) -> "ModulusPoint":
        """'0.3,1.1' -> ModulusPoint(0.3, 1.1); fractions like '1/3' are accepted"""
        try:
            re_part, im_part = (s.strip() for s in text.split(","))
            return cls(float(Fraction(re_part)), float(Fraction(im_part)))
        except (ValueError, TypeError) as e:
            raise DomainError(f"cannot parse tau from {text!r}: {e}")

    @property
    def tau(self) -> mp.mpc:
        return mp.mpc(self.tau1, self.tau2)

    @property
    def y(self) -> mp.mpf:
        return mp.pi * self.tau2

    @property
    def q_abs(self) -> mp.mpf:
        return mp.exp(-2 * mp.pi * self.tau2)

    def translate(self, n: int = 1) -> "ModulusPoint":
        return ModulusPoint(self.tau1 + n, self.tau2)

    def invert(self) -> "ModulusPoint":
        """tau -> -1/tau"""
        t = -1 / self.tau
        return ModulusPoint(float(t.real), float(t.imag))


@dataclass(frozen=True)
class LatticeSumResult:
    value: PrecisionReal
    cutoff: int
    tail_estimate: PrecisionReal
    converged: bool = True
    partial_sums: Optional[tuple] = None

    @property
    def error(self) -> mp.mpf:
        return self.value.error
