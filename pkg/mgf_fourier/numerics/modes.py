"""
The constant Fourier mode in tau1 of a lattice sum, and the decay of its
non-Laurent remainder
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Optional, Sequence

import mpmath as mp
import numpy as np
import pandas as pd

from ..analysis.theorem1 import laurent
from ..exact.graph import GraphIndex
from ..utils.errors import DomainError, UnconvergedError
from .lattice import lattice_C
from .types import ModulusPoint, PrecisionReal
from .zeta import evaluate_laurent

logger = logging.getLogger(__name__)

MIN_NODES = 4
MAX_NODES = 256


def constant_mode_num(index, tau2, cutoff: int = 150, tol: float = 1e-10,
                      jobs: int = 1) -> PrecisionReal:
    """
    int_0^1 C(tau1 + i tau2) dtau1 by the trapezoid rule on 4, 8, 16, ... nodes

    Nodes are reused between levels. Doubling stops once successive levels differ
    by less than tol or by less than the lattice error at the nodes.
    """
    exponents = tuple(index.exponents if isinstance(index, GraphIndex) else index)
    if not tau2 > 0:
        raise DomainError(f"tau2 must be positive, got {tau2}")

    cache: Dict[float, PrecisionReal] = {}

    def node(t: float) -> PrecisionReal:
        if t not in cache:
            cache[t] = lattice_C(exponents, ModulusPoint(t, float(tau2)), cutoff,
                                 jobs=jobs).value
        return cache[t]

    def level(K: int):
        values = [node(j / K) for j in range(K)]
        mean = mp.fsum(v.value for v in values) / K
        error = max(v.error for v in values)
        return mean, error

    K = MIN_NODES
    previous, lattice_error = level(K)
    while K < MAX_NODES:
        K *= 2
        current, lattice_error = level(K)
        change = abs(current - previous)
        logger.debug(f"Constant mode of {exponents} at tau2={tau2}: K={K}, change {change}")
        if change <= max(tol, 2 * lattice_error):
            return PrecisionReal(current, 53, change + lattice_error)
        previous = current
    raise UnconvergedError(
        f"constant mode of {exponents} at tau2={tau2} unconverged after {K} nodes",
        estimate=current, error=change,
    )


@dataclass
class DecayReport:
    """Remainder r(tau2) = constant mode - Laurent polynomial and its fitted decay"""

    table: pd.DataFrame
    rate: float

    @property
    def rate_in_units_of_2pi(self) -> float:
        return self.rate / (2 * np.pi)


def decay_rate(a1: int, a2: int, a3: int, tau2_values: Sequence[float],
               cutoff: int = 150, plot_path: Optional[Path] = None) -> DecayReport:
    """
    Fit log|r(tau2)| = -rate * tau2 + c over the given points

    A rate near 4 pi means the remainder decays like e^{-4 pi tau2}; the
    empirical value is reported as is.
    """
    if len(tau2_values) < 2:
        raise DomainError("need at least two tau2 values to fit a decay rate")
    polynomial = laurent(a1, a2, a3)
    rows = []
    for tau2 in tau2_values:
        mode = constant_mode_num((a1, a2, a3), tau2, cutoff)
        remainder = mode - evaluate_laurent(polynomial, tau2, 128)
        rows.append({
            "tau2": float(tau2),
            "constant_mode": float(mode.value),
            "remainder": float(remainder.value),
            "error": float(remainder.error),
        })
    table = pd.DataFrame(rows)
    usable = table[table["remainder"].abs() > 2 * table["error"]]
    if len(usable) < 2:
        raise UnconvergedError(
            "remainder is below the numeric error at all but one point; "
            "use smaller tau2 or a larger cutoff"
        )
    slope, _ = np.polyfit(usable["tau2"], np.log(usable["remainder"].abs()), 1)
    report = DecayReport(table, float(-slope))
    logger.info(
        f"C_{{{a1},{a2},{a3}}} remainder decays at rate {report.rate:.4f} "
        f"= {report.rate_in_units_of_2pi:.3f} x 2 pi"
    )
    if plot_path is not None:
        _plot_decay(usable, report, Path(plot_path), (a1, a2, a3))
    return report


def _plot_decay(table: pd.DataFrame, report: DecayReport, path: Path, triple) -> None:
    import matplotlib

    matplotlib.use("Agg")
    from matplotlib import pyplot as plt

    path.parent.mkdir(parents=True, exist_ok=True)
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.semilogy(table["tau2"], table["remainder"].abs(), "o-", label="|remainder|")
    ax.set_xlabel("tau2")
    ax.set_title(f"C_{triple}: rate {report.rate_in_units_of_2pi:.3f} x 2 pi")
    ax.legend()
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    logger.info(f"Decay plot saved to {path}")
