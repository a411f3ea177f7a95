"""
Tests for the G-function
"""

import mpmath as mp
import pytest

from mgf_fourier.analysis import G_closed, G_quad, G_terms
from mgf_fourier.utils.errors import DomainError


def test_lowest_case():
    value = G_closed(1, 1, 0.5)
    assert abs(value.value - 2 * mp.pi) < mp.mpf(10) ** -60


def test_even_in_mu():
    assert abs(G_closed(2, 1, -0.7).value - G_closed(2, 1, 0.7).value) < mp.mpf(10) ** -60


def test_terms_cover_both_orders():
    assert len(G_terms(1, 1)) == 2
    assert len(G_terms(2, 1)) == 3 + 1


@pytest.mark.parametrize("a1,a2,mu", [(1, 1, 0.3), (2, 1, 0.7), (3, 2, 1.3), (4, 4, 0.25)])
def test_closed_form_matches_quadrature(a1, a2, mu):
    closed = G_closed(a1, a2, mu, prec=128)
    quad = G_quad(a1, a2, mu, prec=128, tol=1e-12)
    assert abs(closed.value - quad.value) < mp.mpf(10) ** -12 * (1 + abs(closed.value))


@pytest.mark.parametrize("args", [(0, 1, 0.5), (1, 1, 0)])
def test_domain(args):
    with pytest.raises(DomainError):
        G_closed(*args)


def test_symmetric_in_exponents():
    assert abs(G_closed(3, 1, 0.6).value - G_closed(1, 3, 0.6).value) < mp.mpf(10) ** -60
