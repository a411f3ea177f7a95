"""
Tests for the Laplace system on Laurent polynomials
"""

from fractions import Fraction

import pytest

from mgf_fourier.analysis import (
    eisenstein_laurent,
    laplace_laurent,
    laplace_sources,
    laplace_system_residual,
)
from mgf_fourier.utils.errors import DomainError


@pytest.mark.parametrize("w", [2, 3, 5, 8])
def test_eisenstein_eigenvalue(w):
    p = eisenstein_laurent(w)
    assert laplace_laurent(p) == p.scaled(w * (w - 1))


def test_sources_C111():
    assert laplace_sources(1, 1, 1) == {("E", (3,)): Fraction(6)}


def test_sources_C211():
    assert laplace_sources(2, 1, 1) == {("E", (4,)): Fraction(9), ("EE", (2, 2)): Fraction(-1)}


def test_sources_are_symmetric():
    assert laplace_sources(3, 2, 1) == laplace_sources(1, 3, 2)


@pytest.mark.parametrize("triple", [
    (1, 1, 1), (2, 1, 1), (2, 2, 1), (3, 1, 1), (2, 2, 2),
    (3, 2, 1), (4, 1, 1), (3, 3, 1), (4, 2, 2), (5, 1, 1),
])
def test_system_holds_on_laurent_polynomials(triple):
    assert laplace_system_residual(*triple).is_zero


def test_domain():
    with pytest.raises(DomainError):
        laplace_sources(0, 1, 1)
