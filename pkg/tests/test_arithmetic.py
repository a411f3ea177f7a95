"""
Tests for exact combinatorics and GraphIndex
"""

from fractions import Fraction

import pytest

from mgf_fourier.exact import (
    GraphIndex,
    bernoulli,
    binom,
    divisor_sigma,
    euler_at_zero,
    zeta_even_pi_power,
)
from mgf_fourier.exact.arithmetic import DEFAULT_TABLE_SIZE, set_table_size, table_size_for
from mgf_fourier.utils.errors import DomainError


@pytest.mark.parametrize("n,k,expected", [
    (4, 2, 6), (0, 0, 1), (2, 3, 0), (5, -1, 0), (-1, 0, 0), (-3, 2, 0), (10, 10, 1),
])
def test_binom_values_and_zero_convention(n, k, expected):
    assert binom(n, k) == expected


def test_binom_symmetry():
    for n in range(12):
        for k in range(n + 1):
            assert binom(n, k) == binom(n, n - k)


@pytest.mark.parametrize("n,expected", [
    (0, Fraction(1)), (1, Fraction(-1, 2)), (2, Fraction(1, 6)), (3, Fraction(0)),
    (4, Fraction(-1, 30)), (12, Fraction(-691, 2730)),
])
def test_bernoulli_values(n, expected):
    assert bernoulli(n) == expected


def test_bernoulli_recurrence():
    for n in range(1, 60):
        assert sum(binom(n + 1, k) * bernoulli(k) for k in range(n + 1)) == 0


def test_bernoulli_beyond_default_table():
    # index past the shared table size forces a larger table
    assert bernoulli(301) == 0
    assert bernoulli(300) != 0


@pytest.fixture
def restore_table_size():
    yield
    set_table_size(DEFAULT_TABLE_SIZE)


def test_configured_table_size(restore_table_size):
    set_table_size(16)
    assert table_size_for(3) == 16
    assert table_size_for(20) == 32
    assert bernoulli(20) == Fraction(-174611, 330)
    assert euler_at_zero(5) == Fraction(-1, 2)


def test_table_size_domain(restore_table_size):
    with pytest.raises(DomainError):
        set_table_size(8)
    assert table_size_for(0) == DEFAULT_TABLE_SIZE


@pytest.mark.parametrize("n,expected", [
    (0, Fraction(1)), (1, Fraction(-1, 2)), (2, Fraction(0)), (3, Fraction(1, 4)),
    (4, Fraction(0)), (5, Fraction(-1, 2)),
])
def test_euler_at_zero_values(n, expected):
    assert euler_at_zero(n) == expected


def test_euler_at_zero_bernoulli_closed_form():
    for n in range(1, 80):
        assert euler_at_zero(n) == 2 * (1 - 2 ** (n + 1)) * bernoulli(n + 1) / (n + 1)


@pytest.mark.parametrize("k,expected", [
    (1, Fraction(1, 6)), (2, Fraction(1, 90)), (3, Fraction(1, 945)), (4, Fraction(1, 9450)),
])
def test_zeta_even_pi_power(k, expected):
    assert zeta_even_pi_power(k) == expected


@pytest.mark.parametrize("s,n,expected", [
    (3, 1, Fraction(1)), (-3, 2, Fraction(9, 8)), (1, 6, Fraction(12)), (0, 12, Fraction(6)),
])
def test_divisor_sigma(s, n, expected):
    assert divisor_sigma(s, n) == expected


def test_divisor_sigma_reflection():
    for n in range(1, 40):
        for s in (1, 3, 5):
            assert divisor_sigma(s, n) == Fraction(n) ** s * divisor_sigma(-s, n)


@pytest.mark.parametrize("call", [
    lambda: bernoulli(-1),
    lambda: euler_at_zero(-2),
    lambda: zeta_even_pi_power(0),
    lambda: divisor_sigma(1, 0),
])
def test_negative_arguments_rejected(call):
    with pytest.raises(DomainError):
        call()


class TestGraphIndex:
    def test_weight_and_loops(self):
        index = GraphIndex.of(2, 1, 1)
        assert index.weight == 4
        assert index.loops == 3
        assert str(index) == "C_{2,1,1}"

    def test_canonical_order(self):
        assert GraphIndex.of(1, 3, 2).canonical() == GraphIndex.of(3, 2, 1)

    def test_orderings_count_duplicates(self):
        assert len(list(GraphIndex.of(2, 1, 1).orderings())) == 6

    @pytest.mark.parametrize("exponents", [(1,), (0, 2, 1), (2, -1, 3)])
    def test_invalid_exponents(self, exponents):
        with pytest.raises(DomainError):
            GraphIndex(exponents)

    def test_laurent_domain(self):
        assert GraphIndex.of(1, 1, 1).require_laurent_domain() == (1, 1, 1)
        with pytest.raises(DomainError):
            GraphIndex.of(2, 1).require_laurent_domain()
        with pytest.raises(DomainError):
            GraphIndex.of(1, 1, 1, 1).require_laurent_domain()
