"""
The inhomogeneous Laplace system of the two-loop functions at the level of
Laurent polynomials.

(Delta - sum a_r(a_r - 1)) C_{a1,a2,a3} is a combination of C's of the same weight
plus Eisenstein series and their products. Indices that drop to 0 or -1 are
replaced by their Eisenstein expressions; the formal E_1 terms cancel.
"""

import logging
from collections import defaultdict
from fractions import Fraction
from itertools import permutations
from typing import Dict, Tuple

from ..algebra import LaurentPolynomial, Variable
from ..utils.errors import DomainError
from .theorem1 import eisenstein_laurent, laurent

logger = logging.getLogger(__name__)

# ("C", (a,b,c)), ("EE", (a,b)) or ("E", (w,))
Key = Tuple[str, Tuple[int, ...]]


def laplace_laurent(p: LaurentPolynomial) -> LaurentPolynomial:
    """Delta on a function of tau2 alone: tau2^n -> n(n-1) tau2^n in any variable"""
    return LaurentPolynomial(
        {n: c * (n * (n - 1)) for n, c in p.items()}, p.variable, p.weight
    )


def _add_graph(out: Dict[Key, Fraction], a: Tuple[int, int, int], q: Fraction) -> None:
    """Add q C_a, rewriting a zero or negative exponent"""
    lowest = min(a)
    if lowest >= 1:
        out[("C", tuple(sorted(a, reverse=True)))] += q
        return
    i = a.index(lowest)
    x, y = (a[j] for j in range(3) if j != i)
    if lowest == 0:
        # C_{x,y,0} = E_x E_y - E_{x+y}
        out[("EE", tuple(sorted((x, y))))] += q
        out[("E", (x + y,))] -= q
    elif lowest == -1:
        # C_{x,y,-1} = E_{x-1} E_y + E_x E_{y-1}
        out[("EE", tuple(sorted((x - 1, y))))] += q
        out[("EE", tuple(sorted((x, y - 1))))] += q
    else:
        raise DomainError(f"exponent {lowest} below -1 in C_{a}")


def laplace_sources(a1: int, a2: int, a3: int) -> Dict[Key, Fraction]:
    """
    Right-hand side of (Delta - sum a(a-1)) C_{a1,a2,a3} as {term: coefficient}

    Terms with formal E_1 factors must cancel; a surviving one raises DomainError.
    """
    if min(a1, a2, a3) < 1:
        raise DomainError(f"Laplace system needs a_r >= 1, got ({a1},{a2},{a3})")
    out: Dict[Key, Fraction] = defaultdict(Fraction)
    for b1, b2, b3 in permutations((a1, a2, a3)):
        q = Fraction(b1 * b2)
        _add_graph(out, (b1 - 1, b2 + 1, b3), q)
        _add_graph(out, (b1 + 1, b2 + 1, b3 - 2), q / 2)
        _add_graph(out, (b1, b2 + 1, b3 - 1), -2 * q)
    sources = {k: v for k, v in out.items() if v}
    leftover = [k for k in sources if 1 in k[1] and k[0] != "C"]
    if leftover:
        raise DomainError(f"formal E_1 terms survive in the Laplace system: {leftover}")
    return sources


def _source_laurent(key: Key) -> LaurentPolynomial:
    kind, idx = key
    if kind == "C":
        return laurent(*idx)
    if kind == "EE":
        return eisenstein_laurent(idx[0]) * eisenstein_laurent(idx[1])
    return eisenstein_laurent(idx[0])


def laplace_system_residual(a1: int, a2: int, a3: int) -> LaurentPolynomial:
    """Laurent polynomial of LHS - RHS of the Laplace equation; identically zero"""
    own = laurent(a1, a2, a3)
    shift = sum(a * (a - 1) for a in (a1, a2, a3))
    total = laplace_laurent(own) - own.scaled(shift)
    for key, q in laplace_sources(a1, a2, a3).items():
        total = total - _source_laurent(key).scaled(q)
    logger.debug(f"Laplace residual of C_{{{a1},{a2},{a3}}}: {len(total.powers)} terms")
    return LaurentPolynomial(dict(total.items()), Variable.U, a1 + a2 + a3)
