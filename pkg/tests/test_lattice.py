"""
Tests for direct lattice sums and their tail extrapolation
"""

import pytest

from mgf_fourier.exact import GraphIndex
from mgf_fourier.numerics import ModulusPoint, lattice_C, tail_model
from mgf_fourier.numerics.lattice import cutoff_ladder
from mgf_fourier.utils.errors import DomainError, UnconvergedError


@pytest.mark.parametrize("exponents,expected", [
    ((1, 1, 1), (2, 1)),
    ((2, 1, 1), (2, 0)),
    ((1, 1, 1, 1), (2, 2)),
    ((2, 2, 0), (2, 0)),
    ((2, 1), (4, 0)),
    ((3, 1), (6, 0)),
])
def test_tail_model(exponents, expected):
    assert tail_model(exponents) == expected


def test_cutoff_ladder():
    assert cutoff_ladder(150, 3) == [150, 106, 75]
    with pytest.raises(DomainError):
        cutoff_ladder(12, 4)


@pytest.mark.parametrize("exponents", [(1, 1, 1, 1, 1), (1,), (1, 0), (1, 1, 0), (2, -1, 1)])
def test_unsupported_exponents(exponents):
    with pytest.raises(DomainError):
        lattice_C(exponents, ModulusPoint(0, 1), 40)


def test_tolerance_is_enforced():
    with pytest.raises(UnconvergedError):
        lattice_C((2, 1, 1), ModulusPoint(0, 1), 40, tol=1e-30)


def test_result_records_ladder():
    result = lattice_C(GraphIndex.of(2, 1, 1), ModulusPoint(0, 1), 40)
    assert result.cutoff == 40
    assert [N for N, _ in result.partial_sums] == [40, 28, 20]
    assert result.converged
    assert result.error > 0


def test_extrapolation_precision():
    tau = ModulusPoint(0, 1)
    default = lattice_C((2, 1, 1), tau, 40)
    wide = lattice_C((2, 1, 1), tau, 40, prec=128)
    assert default.value.prec == 53
    assert wide.value.prec == 128
    assert wide.tail_estimate.prec == 128
    # box sums are double precision either way
    assert wide.error >= 2.0 ** -37
    assert abs(wide.value.value - default.value.value) < 1e-10
    with pytest.raises(DomainError):
        lattice_C((2, 1, 1), tau, 40, prec=32)


@pytest.mark.slow
def test_permutation_invariance():
    tau = ModulusPoint(0.1, 1.2)
    a = lattice_C((2, 1, 1), tau, 100).value
    b = lattice_C((1, 2, 1), tau, 100).value
    assert abs(a.value - b.value) < 1e-10


@pytest.mark.slow
def test_modular_invariance():
    tau = ModulusPoint(0.2, 1.1)
    a = lattice_C((2, 1, 1), tau, 150).value
    b = lattice_C((2, 1, 1), tau.invert(), 150).value
    assert abs(a.value - b.value) < 1e-6


@pytest.mark.slow
def test_threads_do_not_change_the_value():
    tau = ModulusPoint(0.0, 1.0)
    a = lattice_C((1, 1, 1), tau, 80, jobs=1).value
    b = lattice_C((1, 1, 1), tau, 80, jobs=3).value
    assert a.value == b.value
