"""
Tests for numeric zeta values and evaluation of exact objects
"""

import mpmath as mp
import pytest

from mgf_fourier.algebra import LaurentPolynomial, SymbolicConstant, Variable
from mgf_fourier.numerics import (
    double_zeta_num,
    evaluate_constant,
    evaluate_laurent,
    zeta_num,
)
from mgf_fourier.utils.errors import DomainError


def test_single_values():
    with mp.workprec(256):
        assert abs(zeta_num(2).value - mp.pi ** 2 / 6) < mp.mpf(10) ** -70
        assert abs(zeta_num(3).value - mp.zeta(3)) < mp.mpf(10) ** -70
    assert abs(zeta_num(50, 128).value - 1) < mp.mpf(2) ** -49


@pytest.mark.parametrize("s", [1, 0.5, -2])
def test_single_domain(s):
    with pytest.raises(DomainError):
        zeta_num(s)


def test_double_values():
    with mp.workprec(160):
        assert abs(double_zeta_num(3, 1, 160).value - mp.pi ** 4 / 360) < mp.mpf(10) ** -30
        assert abs(double_zeta_num(2, 1, 160).value - mp.zeta(3)) < mp.mpf(10) ** -30


def test_double_error_bound():
    z = double_zeta_num(4, 2, 160)
    assert 0 < z.error < mp.mpf(10) ** -30


def test_double_stuffle():
    with mp.workprec(160):
        lhs = double_zeta_num(3, 2, 160).value + double_zeta_num(2, 3, 160).value
        rhs = mp.zeta(2) * mp.zeta(3) - mp.zeta(5)
        assert abs(lhs - rhs) < mp.mpf(10) ** -30


@pytest.mark.slow
@pytest.mark.parametrize("s", range(2, 9))
def test_reflection_grid(s):
    with mp.workprec(160):
        for t in range(2, 9):
            lhs = double_zeta_num(s, t, 160).value + double_zeta_num(t, s, 160).value
            rhs = mp.zeta(s) * mp.zeta(t) - mp.zeta(s + t)
            assert abs(lhs - rhs) < mp.mpf(10) ** -30, (s, t)


def test_double_domain():
    with pytest.raises(DomainError):
        double_zeta_num(1, 2)


def test_evaluate_constant():
    c = SymbolicConstant.zeta(3) * 2 + SymbolicConstant.pi_power(2, 3) + 1
    value = evaluate_constant(c, 128)
    with mp.workprec(128):
        expected = 2 * mp.zeta(3) + 3 * mp.pi ** 2 + 1
    assert value.agrees_with(expected, mp.mpf(10) ** -30)


def test_evaluate_laurent_respects_variable():
    in_y = LaurentPolynomial({2: 1}, Variable.Y)
    in_u = LaurentPolynomial({2: 1}, Variable.U)
    with mp.workprec(128):
        assert abs(evaluate_laurent(in_y, 0.5, 128).value - (mp.pi / 2) ** 2) < mp.mpf(10) ** -30
        assert abs(evaluate_laurent(in_u, 0.5, 128).value - (2 * mp.pi) ** 2) < mp.mpf(10) ** -30
    with pytest.raises(DomainError):
        evaluate_laurent(in_y, 0)
