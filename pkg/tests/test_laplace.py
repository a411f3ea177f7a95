"""
Tests for the finite-difference Laplace checks
"""

import pytest

from mgf_fourier.numerics import ModulusPoint, laplace_convergence, laplace_residual
from mgf_fourier.utils.errors import DomainError

TAU = ModulusPoint(0.0, 1.0)


def test_eisenstein_eigenvalue():
    result = laplace_residual("eisenstein", TAU, w=3)
    assert abs(result.residual.value) < 1e-5
    assert result.check == "eisenstein3"


def test_eisenstein_step_order():
    result = laplace_residual("eisenstein", ModulusPoint(0.1, 1.2), h=1 / 16, w=4)
    assert 1.8 < result.observed_order < 2.2


def test_raw_residual_shrinks_with_step():
    raw = laplace_convergence("eisenstein", TAU, steps=(1 / 16, 1 / 32), w=2)
    assert abs(raw[1 / 32]) < abs(raw[1 / 16]) / 3


@pytest.mark.parametrize("h", [0, -0.1, 1.0])
def test_step_domain(h):
    with pytest.raises(DomainError):
        laplace_residual("eisenstein", TAU, h=h)


def test_unknown_check():
    with pytest.raises(DomainError):
        laplace_residual("c999", TAU)


@pytest.mark.slow
@pytest.mark.parametrize("check", ["c111", "c211", "c221"])
def test_two_loop_equations(check):
    result = laplace_residual(check, TAU, cutoff=150)
    assert abs(result.residual.value) < 1e-3


@pytest.mark.slow
def test_degenerate_index():
    result = laplace_residual("degenerate", TAU, cutoff=150)
    assert abs(result.residual.value) < 1e-6
    assert result.by_step == {}
