"""
Tests for the exact Laurent polynomial of the constant mode
"""

from fractions import Fraction as F
from itertools import permutations

import pytest

from mgf_fourier.algebra import (
    LaurentPolynomial,
    SymbolicConstant,
    Variable,
    convert_variable,
    rewrite_euler_s1,
)
from mgf_fourier.analysis import (
    PartialFractionCoeffs,
    coeff_bottom,
    coeff_c0_bottom,
    coeff_top,
    coeff_zeta,
    coeff_zeta_theta,
    double_zeta_Z,
    eisenstein_laurent,
    g_coeff,
    g_table,
    is_cusp_candidate,
    kl_laurent_part,
    laurent,
    laurent_combination,
    pf_A,
    pf_B,
)
from mgf_fourier.analysis import theorem1
from mgf_fourier.numerics.identities import IDENTITIES
from mgf_fourier.utils.errors import CrossCheckError, DomainError


def odd_zetas(*args):
    c = SymbolicConstant.rational(1)
    for n in args:
        c = c * SymbolicConstant.zeta(n)
    return c


# (power of y, coefficient, odd zeta arguments)
TABLE_IN_Y = {
    (1, 1, 1): [(3, F(2, 945), ()), (0, F(1), (3,)), (-2, F(3, 4), (5,))],
    (2, 1, 1): [
        (4, F(2, 14175), ()), (1, F(1, 45), (3,)), (-1, F(5, 12), (5,)),
        (-2, F(-1, 4), (3, 3)), (-3, F(9, 16), (7,)),
    ],
    (3, 1, 1): [
        (5, F(2, 155925), ()), (2, F(2, 945), (3,)), (0, F(-1, 180), (5,)),
        (-2, F(7, 16), (7,)), (-3, F(-1, 2), (3, 5)), (-4, F(43, 64), (9,)),
    ],
    (2, 2, 2): [
        (6, F(38, 91216125), ()), (-1, F(1, 24), (7,)), (-3, F(-7, 16), (9,)),
        (-4, F(15, 16), (5, 5)), (-5, F(-81, 128), (11,)),
    ],
}

SMALL_TRIPLES = [
    (a1, a2, a3)
    for a1 in range(1, 6) for a2 in range(1, a1 + 1) for a3 in range(1, a2 + 1)
    if a1 + a2 + a3 <= 10
]


def table_polynomial(triple):
    coeffs = {}
    for power, q, zetas in TABLE_IN_Y[triple]:
        coeffs[power] = coeffs.get(power, SymbolicConstant.zero()) + odd_zetas(*zetas) * q
    return LaurentPolynomial(coeffs, Variable.Y, sum(triple))


class TestPartialFractions:
    @pytest.mark.parametrize("k,a,b,expected", [
        (2, 2, 3, 1), (1, 2, 2, -2), (3, 2, 2, 0), (0, 2, 2, 0),
    ])
    def test_pf_A(self, k, a, b, expected):
        assert pf_A(k, a, b) == expected

    def test_pf_B(self):
        assert pf_B(1, 2, 1) == 1
        assert pf_B(2, 2, 1) == 0

    @pytest.mark.parametrize("a,b", [(1, 1), (2, 1), (3, 2), (4, 4), (1, 5)])
    def test_decomposition_identity(self, a, b):
        coeffs = PartialFractionCoeffs.build(a, b)
        for x, y, z in [(F(1, 3), F(2), F(5, 7)), (F(-2), F(7, 2), F(11))]:
            assert coeffs.evaluate(x, y, z) == 1 / ((z + x) ** a * (z + y) ** b)

    def test_domain(self):
        with pytest.raises(DomainError):
            pf_A(1, 0, 1)


class TestGCoefficients:
    @pytest.mark.parametrize("a1,a2,alpha,beta,expected", [
        (1, 1, 0, 0, -1), (2, 1, 0, 0, 2), (2, 1, 1, 1, 0), (2, 1, 1, 0, 1),
    ])
    def test_values(self, a1, a2, alpha, beta, expected):
        assert g_coeff(a1, a2, alpha, beta) == expected

    def test_table_drops_zeros(self):
        assert g_table(2, 1) == {(0, 0): 2, (1, 0): 1, (0, 1): 1}


class TestCoefficients:
    @pytest.mark.parametrize("triple,expected", [
        ((1, 1, 1), F(-1, 30240)), ((2, 1, 1), F(1, 1814400)),
    ])
    def test_coeff_top(self, triple, expected):
        assert coeff_top(*triple) == expected

    @pytest.mark.parametrize("k,expected", [(1, F(1, 180)), (2, F(5, 3)), (3, F(36))])
    def test_coeff_zeta_C211(self, k, expected):
        assert coeff_zeta(2, 1, 1, k) == expected

    @pytest.mark.parametrize("triple", SMALL_TRIPLES)
    def test_tower_routes_agree(self, triple):
        w = sum(triple)
        for k in range(1, w):
            assert coeff_zeta(*triple, k) == coeff_zeta_theta(*triple, k)

    def test_tower_index_domain(self):
        with pytest.raises(DomainError):
            coeff_zeta(2, 1, 1, 4)

    @pytest.mark.parametrize("triple,expected", [((1, 1, 1), 6), ((2, 1, 1), -14)])
    def test_c0(self, triple, expected):
        assert coeff_c0_bottom(*triple) == expected

    def test_printed_c0_differs(self):
        assert coeff_c0_bottom(2, 1, 1, printed=True) != coeff_c0_bottom(2, 1, 1)

    def test_bottom_of_C111_cancels(self):
        assert rewrite_euler_s1(coeff_bottom(1, 1, 1)).is_zero

    @pytest.mark.parametrize("triple,expected", [
        ((1, 1, 1), {(3, 1): 2}),
        ((1, 2, 1), {(5, 1): 6}),
        ((2, 1, 1), {(5, 1): 6, (4, 2): 6, (3, 3): 4}),
    ])
    def test_double_zeta_Z(self, triple, expected):
        combination = SymbolicConstant.zero()
        for (a, b), coeff in expected.items():
            combination = combination + SymbolicConstant.double_zeta(a, b) * coeff
        assert double_zeta_Z(*triple) == combination

    @pytest.mark.parametrize("triple", [(2, 1, 1), (3, 2, 1), (4, 3, 1)])
    def test_symmetric_coefficients(self, triple):
        for order in permutations(triple):
            assert coeff_top(*order) == coeff_top(*triple)
            assert coeff_c0_bottom(*order) == coeff_c0_bottom(*triple)

    @pytest.mark.parametrize("triple", SMALL_TRIPLES)
    def test_kl_bottom_piece_is_c0(self, triple):
        w = sum(triple)
        expected = SymbolicConstant.zeta(2 * w - 2) * ((-1) ** w * coeff_c0_bottom(*triple))
        assert kl_laurent_part(*triple).coefficient(2 - w) == expected


class TestLaurent:
    @pytest.mark.parametrize("triple", sorted(TABLE_IN_Y))
    def test_known_table(self, triple):
        computed = convert_variable(laurent(*triple, cross_check=True), Variable.Y)
        assert computed == table_polynomial(triple)

    @pytest.mark.parametrize("triple", [(2, 1, 1), (3, 2, 1), (4, 2, 1)])
    def test_permutation_symmetry(self, triple):
        reference = laurent(*triple)
        for order in permutations(triple):
            assert laurent(*order) == reference

    def test_cross_check_disagreement_is_typed(self, monkeypatch):
        monkeypatch.setattr(theorem1, "coeff_zeta_theta", lambda a1, a2, a3, k: F(1, 7))
        with pytest.raises(CrossCheckError, match="theta form"):
            laurent(2, 1, 1, cross_check=True)
        assert laurent(2, 1, 1) == laurent(1, 2, 1)

    def test_degree_range(self):
        p = laurent(3, 2, 1)
        assert p.degree == 6
        assert p.valuation == -5
        assert p.weight == 6

    @pytest.mark.parametrize("triple", [(2, 1, 1), (3, 2, 2)])
    def test_kl_part_carries_the_tower(self, triple):
        w = sum(triple)
        full = laurent(*triple)
        tower = kl_laurent_part(*triple)
        for k in range(1, w):
            power = w - 2 * k - 1
            assert tower.coefficient(power) == full.coefficient(power)

    def test_unreduced_keeps_double_zetas(self):
        p = laurent(2, 1, 1, reduced=False)
        assert p.coefficient(-2).has_double()
        assert not laurent(2, 1, 1).coefficient(-2).has_double()

    @pytest.mark.parametrize("triple", [(1, 1, 0), (0, 1, 1), (2, -1, 3)])
    def test_domain(self, triple):
        with pytest.raises(DomainError):
            laurent(*triple)


class TestEisenstein:
    def test_E3(self):
        p = convert_variable(eisenstein_laurent(3), Variable.Y)
        assert p.coefficient(3) == SymbolicConstant.rational(F(2, 945))
        assert p.coefficient(-2) == SymbolicConstant.zeta(5) * F(3, 4)

    def test_E2(self):
        p = convert_variable(eisenstein_laurent(2), Variable.Y)
        assert p.coefficient(2) == SymbolicConstant.rational(F(1, 45))
        assert p.coefficient(-1) == SymbolicConstant.zeta(3)

    def test_domain(self):
        with pytest.raises(DomainError):
            eisenstein_laurent(1)


class TestIdentities:
    @pytest.mark.parametrize("name", ["id1", "id2a", "id2b", "id2c"])
    def test_laurent_level(self, name):
        residual = IDENTITIES[name].laurent_residual()
        assert residual.is_zero
        assert is_cusp_candidate(residual)

    def test_four_edge_identity_has_no_laurent_routine(self):
        with pytest.raises(DomainError):
            IDENTITIES["id3"].laurent_residual()

    def test_combination_with_constant(self):
        p = laurent_combination({(1, 1, 1): 1, 3: -1}, SymbolicConstant.zeta(3) * -1)
        assert p.is_zero

    def test_nonvanishing_combination(self):
        assert not is_cusp_candidate(laurent_combination({(2, 1, 1): 1}))
