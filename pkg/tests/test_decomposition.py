"""
Tests for the odd-pair reduction of the bottom coefficient
"""

from fractions import Fraction as F

import mpmath as mp
import pytest

from mgf_fourier.algebra import SymbolicConstant, zeta_product
from mgf_fourier.analysis import (
    OddPairDecomposition,
    S_reduce,
    S_reduce_N0,
    S_value,
    T_reduce,
    T_value,
    X_value,
    X_value_shifted,
    Z_alpha,
    c_bottom_reduced,
    coeff_bottom,
    f_table,
    gamma_coeffs,
    lemma_sum_rhs,
    phi_coeff,
    tilde_f_residuals,
)
from mgf_fourier.numerics import evaluate_constant
from mgf_fourier.utils.errors import DomainError, ZetaOneError

GRID = [
    (a1, a2, a3)
    for a1 in range(2, 7) for a2 in range(1, 6) for a3 in range(1, 6)
]

PREC = 160
TOL = mp.mpf(10) ** -30
LEMMA_GRID = [(M, N) for M in range(2, 7) for N in range(0, 5) if M + N <= 6]
BOTTOM_TRIPLES = [
    (a1, a2, a3)
    for a1 in range(1, 9) for a2 in range(1, a1 + 1) for a3 in range(1, a2 + 1)
    if 3 <= a1 + a2 + a3 <= 10
]


@pytest.mark.parametrize("l,expected", [(0, 1), (1, -1), (2, 3), (3, -17), (4, 155)])
def test_phi_coefficients(l, expected):
    assert phi_coeff(l) == expected


def test_tilde_f_residuals_vanish():
    assert all(r == 0 for r in tilde_f_residuals(12))


def test_T_reduce_small():
    assert T_reduce(2, 1) == SymbolicConstant.zeta(6) * F(21, 8) - zeta_product(3, 3)


def test_f_table_range():
    table = f_table(2, 1)
    assert sorted(table) == [1, 2, 3, 4, 5]
    assert table[3] == -2


def test_S_reduce_N0_matches_euler():
    # zeta(3,1) = pi^4/360
    assert S_reduce_N0(2) == SymbolicConstant.pi_power(4, F(1, 360))


def test_S_plus_T_symbols():
    total = S_value(2, 1) + T_value(2, 1)
    assert total.has_double()
    assert not lemma_sum_rhs(2, 1).has_double()


def test_S_T_domain():
    assert S_value(2, 0) == SymbolicConstant.double_zeta(3, 1)
    with pytest.raises(DomainError):
        S_value(1, 1)
    with pytest.raises(DomainError):
        T_value(2, 0)


def test_Z_alpha_values():
    assert Z_alpha(0, 1, 1, 1) == 2
    assert Z_alpha(5, 2, 1, 1) == 0
    with pytest.raises(DomainError):
        Z_alpha(-1, 2, 1, 1)


@pytest.mark.parametrize("triple", GRID)
def test_X_vanishes_and_forms_agree(triple):
    a1 = triple[0]
    for n in range(1, a1):
        assert X_value(n, *triple) == 0
        assert X_value_shifted(n, *triple) == 0


def test_X_domain():
    with pytest.raises(DomainError):
        X_value(2, 2, 1, 1)


class TestGamma:
    def test_C211(self):
        decomposition = gamma_coeffs(2, 1, 1)
        assert decomposition.gamma == (-8, 0)
        assert decomposition.integral
        assert decomposition.folded == {(3, 3): -4}
        assert decomposition.source == "conjecture"

    def test_C111_is_empty(self):
        assert gamma_coeffs(1, 1, 1).gamma == (0,)
        assert gamma_coeffs(1, 1, 1).to_constant().is_zero

    def test_printed_normalization(self):
        printed = gamma_coeffs(2, 1, 1, printed=True)
        assert printed.gamma[0] == -36
        assert printed.source == "printed"

    @pytest.mark.parametrize("triple", [(2, 1, 1), (3, 1, 1), (2, 2, 1), (3, 2, 1), (2, 2, 2), (4, 3, 1)])
    def test_matches_reduction(self, triple):
        assert gamma_coeffs(*triple).to_constant() == c_bottom_reduced(*triple).to_constant()

    def test_zeta_one_slot(self):
        decomposition = OddPairDecomposition(4, (F(-8), F(2)))
        with pytest.raises(ZetaOneError):
            decomposition.folded

    def test_from_constant(self):
        decomposition = OddPairDecomposition.from_constant(zeta_product(3, 3) * -4, 4)
        assert decomposition.gamma == (-8, 0)
        assert decomposition.weight == 6
        with pytest.raises(DomainError):
            OddPairDecomposition.from_constant(SymbolicConstant.zeta(7), 4)


class TestBottomReduction:
    def test_C211(self):
        assert c_bottom_reduced(2, 1, 1).to_constant() == zeta_product(3, 3) * -4

    def test_C111(self):
        assert c_bottom_reduced(1, 1, 1).to_constant().is_zero

    @pytest.mark.slow
    @pytest.mark.parametrize("M,N", LEMMA_GRID)
    def test_S_reduction_numerically(self, M, N):
        direct = evaluate_constant(S_value(M, N), PREC).value
        reduced = evaluate_constant(S_reduce(M, N), PREC).value
        assert abs(direct - reduced) < TOL

    @pytest.mark.slow
    @pytest.mark.parametrize("M,N", [mn for mn in LEMMA_GRID if mn[1] >= 1])
    def test_S_plus_T_numerically(self, M, N):
        lhs = evaluate_constant(S_value(M, N) + T_value(M, N), PREC).value
        rhs = evaluate_constant(lemma_sum_rhs(M, N), PREC).value
        assert abs(lhs - rhs) < TOL
        direct = evaluate_constant(T_value(M, N), PREC).value
        assert abs(direct - evaluate_constant(T_reduce(M, N), PREC).value) < TOL

    @pytest.mark.slow
    @pytest.mark.parametrize("triple", BOTTOM_TRIPLES)
    def test_double_zeta_form_agrees(self, triple):
        direct = evaluate_constant(coeff_bottom(*triple), PREC).value
        reduced = evaluate_constant(c_bottom_reduced(*triple).to_constant(), PREC).value
        assert abs(direct - reduced) < TOL
