"""
Direct lattice sums C_{a1,...,al}(tau) for l = 2, 3, 4.

The constraint p_1 + ... + p_l = 0 is eliminated by convolution: every momentum
runs over the box |m|, |n| <= N, the free sums become FFT convolutions on a padded
grid, and the truncation tail is removed by fitting the known large-N behaviour
over a ladder of cutoffs.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import List, Sequence, Tuple

import mpmath as mp
import numpy as np

from ..exact.graph import GraphIndex
from ..utils.errors import DomainError, UnconvergedError
from .types import LatticeSumResult, ModulusPoint, PrecisionReal

logger = logging.getLogger(__name__)

FLOAT_PREC = 53
MIN_CUTOFF = 8


def _padded_size(cutoff: int) -> int:
    size = 1
    while size < 4 * cutoff + 1:
        size *= 2
    return size


def _propagator(a: int, tau: ModulusPoint, cutoff: int, size: int) -> np.ndarray:
    """(tau2 / (pi |m + n tau|^2))^a on the box, wrapped onto a size x size grid"""
    k = np.arange(-cutoff, cutoff + 1)
    m, n = np.meshgrid(k, k, indexing="ij")
    norm = (m + n * tau.tau1) ** 2 + (n * tau.tau2) ** 2
    norm[cutoff, cutoff] = 1.0
    values = (tau.tau2 / (np.pi * norm)) ** a
    values[cutoff, cutoff] = 0.0
    grid = np.zeros((size, size))
    idx = k % size
    grid[np.ix_(idx, idx)] = values
    return grid


def _convolve(f: np.ndarray, g: np.ndarray) -> np.ndarray:
    return np.fft.irfft2(np.fft.rfft2(f) * np.fft.rfft2(g), s=f.shape)


def _lattice_sum(exponents: Sequence[int], tau: ModulusPoint, cutoff: int) -> float:
    """Box-truncated sum; an exponent of 0 stands for the constant 1 off the origin"""
    size = _padded_size(cutoff)
    f = [_propagator(a, tau, cutoff, size) for a in exponents]
    if len(f) == 2:
        return float(np.sum(f[0] * f[1]))
    if len(f) == 3:
        return float(np.sum(f[0] * _convolve(f[1], f[2])))
    if len(f) == 4:
        return float(np.sum(_convolve(f[0], f[1]) * _convolve(f[2], f[3])))
    raise DomainError(f"lattice sums are implemented for 2 to 4 edges, got {len(f)}")


def tail_model(exponents: Sequence[int]) -> Tuple[int, int]:
    """
    (p, L): the truncation tail behaves like N^-p (d + c_1 log N + ... + c_L log^L N)

    Two momenta escape the box together; the remaining edges contribute a log each
    when their exponent is 1.
    """
    a = sorted(exponents)
    if len(a) == 2:
        return 2 * sum(a) - 2, 0
    return 2 * (a[0] + a[1]) - 2, sum(1 for x in a[2:] if x == 1)


def _fit_limit(cutoffs: Sequence[int], sums: Sequence[float], p: int, logs: int,
               prec: int) -> mp.mpf:
    """
    Solve S(N_i) = S + N_i^-p sum_j c_j log^j N_i exactly on len(cutoffs) points

    N is measured in units of the largest cutoff; the fitted limit S is unchanged.
    """
    with mp.workprec(prec):
        rows = []
        for N in cutoffs:
            x = mp.mpf(N) / cutoffs[0]
            rows.append([1] + [x ** -p * mp.log(x) ** j for j in range(logs + 1)])
        return mp.lu_solve(mp.matrix(rows), mp.matrix([mp.mpf(s) for s in sums]))[0]


def cutoff_ladder(cutoff: int, points: int) -> List[int]:
    """cutoff, cutoff/sqrt(2), cutoff/2, ... rounded, strictly decreasing"""
    ladder = []
    for i in range(points):
        N = int(round(cutoff * 2 ** (-i / 2)))
        if ladder and N >= ladder[-1]:
            N = ladder[-1] - 1
        ladder.append(N)
    if ladder[-1] < MIN_CUTOFF:
        raise DomainError(
            f"cutoff {cutoff} too small: the extrapolation ladder reaches {ladder[-1]}"
        )
    return ladder


def lattice_C(index, tau: ModulusPoint, cutoff: int = 150, prec: int = FLOAT_PREC,
              tol=None, jobs: int = 1) -> LatticeSumResult:
    """
    Evaluate C_{a1,...,al}(tau) by box-truncated FFT convolutions with tail extrapolation

    The box sums are accumulated in double precision; `prec` is the precision
    of the extrapolation and of the returned values, and the reported error
    never drops below the double-precision rounding of the box sums.

    Args:
        index: GraphIndex or exponent tuple (l in 2..4; a zero exponent is allowed)
        tau: Point in the upper half plane
        cutoff: Largest box half-width N
        prec: Working precision in bits of the extrapolation (at least 53)
        tol: When given, raise UnconvergedError if the error bound exceeds it
        jobs: Threads evaluating the cutoff ladder

    Returns:
        LatticeSumResult with the extrapolated value, its error and the raw tail
    """
    exponents = tuple(index.exponents if isinstance(index, GraphIndex) else index)
    if not 2 <= len(exponents) <= 4 or min(exponents) < 0:
        raise DomainError(f"unsupported lattice sum exponents {exponents}")
    if len(exponents) > 2 and sum(exponents) < 3:
        raise DomainError(f"lattice sum {exponents} diverges")
    if len(exponents) == 2 and sum(exponents) < 2:
        raise DomainError(f"lattice sum {exponents} diverges")
    if prec < FLOAT_PREC:
        raise DomainError(f"lattice precision must be at least {FLOAT_PREC} bits, got {prec}")

    p, logs = tail_model(exponents)
    unknowns = logs + 2
    ladder = cutoff_ladder(cutoff, unknowns + 1)

    logger.debug(f"Lattice sum {exponents} at {tau} on cutoffs {ladder}")
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            sums = list(pool.map(lambda N: _lattice_sum(exponents, tau, N), ladder))
    else:
        sums = [_lattice_sum(exponents, tau, N) for N in ladder]

    with mp.workprec(prec):
        best = _fit_limit(ladder[:unknowns], sums[:unknowns], p, logs, prec)
        shifted = _fit_limit(ladder[1:], sums[1:], p, logs, prec)
        rounding = mp.mpf(2) ** (-FLOAT_PREC + 16) * max(1, abs(best))
        error = abs(best - shifted) + rounding
        tail = abs(sums[0] - best)

    result = LatticeSumResult(
        value=PrecisionReal(best, prec, error),
        cutoff=cutoff,
        tail_estimate=PrecisionReal(tail, prec, error),
        converged=tol is None or error <= tol,
        partial_sums=tuple(zip(ladder, sums)),
    )
    if not result.converged:
        raise UnconvergedError(
            f"lattice sum {exponents} at N={cutoff}: "
            f"error {mp.nstr(error, 3)} above {mp.nstr(mp.mpf(tol), 2)}",
            estimate=result.value, error=error,
        )
    return result
