"""
Finite-difference checks of the Laplace equations at a point tau.

Delta = tau2^2 (d^2/dtau1^2 + d^2/dtau2^2) is discretized by the five-point
stencil at steps h and h/2; the two residuals are combined to cancel the h^2 term.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, Tuple

import mpmath as mp

from ..utils.errors import DomainError
from .eisenstein import eisenstein_num
from .lattice import lattice_C
from .types import ModulusPoint, PrecisionReal

logger = logging.getLogger(__name__)

Evaluator = Callable[[ModulusPoint], PrecisionReal]

CHECKS = ("c111", "c211", "c221", "degenerate", "eisenstein")


@dataclass(frozen=True)
class LaplaceCheck:
    """Residual = (Delta - shift) f - source, or f - source when not differentiated"""

    name: str
    function: Evaluator
    source: Evaluator
    shift: int = 0
    differentiate: bool = True


@dataclass
class LaplaceResult:
    check: str
    tau: ModulusPoint
    residual: PrecisionReal
    by_step: Dict[float, float] = field(default_factory=dict)

    @property
    def observed_order(self) -> float:
        """log2 of successive residual ratios; about 2 when truncation dominates"""
        steps = sorted(self.by_step, reverse=True)
        if len(steps) < 2 or self.by_step[steps[1]] == 0:
            return float("nan")
        return float(mp.log(abs(self.by_step[steps[0]] / self.by_step[steps[1]]), 2))


def build_check(check: str, cutoff: int = 150, prec: int = 128, w: int = 3,
                terms: int = 30) -> LaplaceCheck:
    if check not in CHECKS:
        raise DomainError(f"unknown Laplace check {check!r}, expected one of {CHECKS}")

    def C(*a) -> Evaluator:
        return lambda tau: lattice_C(a, tau, cutoff, prec).value

    def E(n: int) -> Evaluator:
        return lambda tau: eisenstein_num(n, tau, terms, prec)

    if check == "c111":
        return LaplaceCheck(check, C(1, 1, 1), lambda t: 6 * E(3)(t))
    if check == "c211":
        return LaplaceCheck(
            check, C(2, 1, 1), lambda t: 9 * E(4)(t) - _square(E(2)(t)), shift=2
        )
    if check == "c221":
        return LaplaceCheck(check, C(2, 2, 1), lambda t: 8 * E(5)(t))
    if check == "degenerate":
        return LaplaceCheck(
            check, C(2, 2, 0), lambda t: _square(E(2)(t)) - E(4)(t), differentiate=False
        )
    if w < 2:
        raise DomainError(f"Eisenstein series need w >= 2, got {w}")
    zero = PrecisionReal(mp.mpf(0), prec)
    return LaplaceCheck(f"eisenstein{w}", E(w), lambda t: zero, shift=w * (w - 1))


def _square(x: PrecisionReal) -> PrecisionReal:
    return PrecisionReal(x.value ** 2, x.prec, 2 * abs(x.value) * x.error)


def _fd_residual(check: LaplaceCheck, tau: ModulusPoint, h: float,
                 center: PrecisionReal, source: PrecisionReal) -> Tuple[mp.mpf, mp.mpf]:
    f = check.function
    around = [
        f(ModulusPoint(tau.tau1 + h, tau.tau2)),
        f(ModulusPoint(tau.tau1 - h, tau.tau2)),
        f(ModulusPoint(tau.tau1, tau.tau2 + h)),
        f(ModulusPoint(tau.tau1, tau.tau2 - h)),
    ]
    scale = mp.mpf(tau.tau2) ** 2 / mp.mpf(h) ** 2
    laplacian = scale * (mp.fsum(v.value for v in around) - 4 * center.value)
    value = laplacian - check.shift * center.value - source.value
    noise = scale * (mp.fsum(v.error for v in around) + 4 * center.error)
    return value, noise + abs(check.shift) * center.error + source.error


def laplace_residual(check: str, tau: ModulusPoint, h: float = 1 / 64,
                     cutoff: int = 150, prec: int = 128, w: int = 3) -> LaplaceResult:
    """
    Residual of a Laplace identity at tau

    The reported value is (4 r(h/2) - r(h)) / 3; its error is the distance to
    r(h/2) plus the propagated evaluation errors.
    """
    if h <= 0 or h >= tau.tau2:
        raise DomainError(f"step must satisfy 0 < h < tau2, got {h}")
    entry = build_check(check, cutoff, prec, w)
    with mp.workprec(prec):
        center = entry.function(tau)
        source = entry.source(tau)
        if not entry.differentiate:
            value = center.value - source.value
            residual = PrecisionReal(value, center.prec, center.error + source.error)
            return LaplaceResult(entry.name, tau, residual)

        coarse, noise = _fd_residual(entry, tau, h, center, source)
        fine, noise_fine = _fd_residual(entry, tau, h / 2, center, source)
        extrapolated = (4 * fine - coarse) / 3
        error = abs(extrapolated - fine) + noise_fine
    logger.info(
        f"Laplace check {entry.name} at {tau.tau1}+{tau.tau2}i: "
        f"r(h)={mp.nstr(coarse, 4)}, r(h/2)={mp.nstr(fine, 4)}"
    )
    return LaplaceResult(
        entry.name, tau, PrecisionReal(extrapolated, center.prec, error),
        by_step={h: float(coarse), h / 2: float(fine)},
    )


def laplace_convergence(check: str, tau: ModulusPoint,
                        steps=(1 / 32, 1 / 64, 1 / 128), **kwargs) -> Dict[float, float]:
    """Raw residual r(h) for each step, for observing the h^2 decrease"""
    entry = build_check(check, **kwargs)
    center = entry.function(tau)
    source = entry.source(tau)
    return {h: float(_fd_residual(entry, tau, h, center, source)[0]) for h in steps}
