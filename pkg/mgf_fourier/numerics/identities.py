"""
Known identities between lattice sums, Eisenstein series and zeta values, checked
numerically at a point and, for the three-edge ones, exactly on Laurent polynomials
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

import mpmath as mp

from ..algebra import LaurentPolynomial, SymbolicConstant
from ..analysis.theorem1 import laurent_combination
from ..utils.errors import DomainError
from .eisenstein import eisenstein_num
from .lattice import lattice_C
from .types import ModulusPoint, PrecisionReal
from .zeta import zeta_num

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Identity:
    """sum q C_a + sum q E_w + sum q E_v E_w + q zeta(n) = 0"""

    name: str
    graphs: Dict[Tuple[int, ...], int]
    eisenstein: Dict[int, int] = field(default_factory=dict)
    products: Dict[Tuple[int, int], int] = field(default_factory=dict)
    zeta: Optional[Tuple[int, int]] = None

    @property
    def two_loop(self) -> bool:
        return all(len(a) == 3 for a in self.graphs) and not self.products

    def laurent_residual(self) -> LaurentPolynomial:
        """Exact Laurent polynomial of the left side; zero when the identity holds"""
        if not self.two_loop:
            raise DomainError(f"{self.name} involves functions without a Laurent routine")
        terms = {**self.graphs, **self.eisenstein}
        constant = None
        if self.zeta:
            n, q = self.zeta
            constant = SymbolicConstant.zeta(n) * q
        return laurent_combination(terms, constant)


IDENTITIES: Dict[str, Identity] = {
    "id1": Identity("id1", {(1, 1, 1): 1}, {3: -1}, zeta=(3, -1)),
    "id2a": Identity("id2a", {(2, 2, 1): 30}, {5: -12}, zeta=(5, -1)),
    "id2b": Identity("id2b", {(3, 3, 1): 252, (3, 2, 2): 252}, {7: -108}, zeta=(7, -1)),
    "id2c": Identity(
        "id2c", {(4, 4, 1): 2160, (4, 3, 2): 4320, (3, 3, 3): 960}, {9: -960},
        zeta=(9, -1),
    ),
    "id3": Identity(
        "id3", {(1, 1, 1, 1): 1, (2, 1, 1): -24}, {4: 18}, products={(2, 2): -3}
    ),
}


@dataclass
class IdentityReport:
    name: str
    tau: ModulusPoint
    cutoff: int
    residual: PrecisionReal
    parts: Dict[str, str] = field(default_factory=dict)

    def passed(self, tol: float) -> bool:
        return abs(self.residual.value) <= tol

    def to_dict(self, tol: float) -> Dict:
        return {
            "identity": self.name,
            "tau": [self.tau.tau1, self.tau.tau2],
            "cutoff": self.cutoff,
            "residual": mp.nstr(self.residual.value, 6),
            "error": mp.nstr(self.residual.error, 3),
            "tolerance": tol,
            "passed": self.passed(tol),
            "parts": self.parts,
        }


def verify_identity(name: str, tau: ModulusPoint, cutoff: int = 150,
                    prec: int = 128, terms: int = 30, jobs: int = 1) -> IdentityReport:
    """
    Evaluate the left side of a named identity at tau

    Lattice sums dominate the error budget; Eisenstein series and zeta values are
    computed at `prec` bits.
    """
    if name not in IDENTITIES:
        raise DomainError(f"unknown identity {name!r}, expected one of {sorted(IDENTITIES)}")
    identity = IDENTITIES[name]
    total = PrecisionReal(mp.mpf(0), prec)
    parts: Dict[str, str] = {}
    with mp.workprec(prec):
        for a, q in identity.graphs.items():
            value = lattice_C(a, tau, cutoff, prec, jobs=jobs).value
            parts[f"C{a}"] = str(value)
            total = total + q * value
        for w, q in identity.eisenstein.items():
            value = eisenstein_num(w, tau, terms, prec)
            parts[f"E{w}"] = str(value)
            total = total + q * value
        for (v, w), q in identity.products.items():
            x = eisenstein_num(v, tau, terms, prec)
            y = eisenstein_num(w, tau, terms, prec)
            product = PrecisionReal(
                x.value * y.value, prec, abs(x.value) * y.error + abs(y.value) * x.error
            )
            total = total + q * product
        if identity.zeta:
            n, q = identity.zeta
            total = total + q * zeta_num(n, prec)
    logger.info(f"{name} at {tau}: residual {total}")
    return IdentityReport(name, tau, cutoff, total, parts)
