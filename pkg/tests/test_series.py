from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from exactseries.series import (
    PowerSeries,
    SeriesDomainError,
    binomial_series,
    coefficient,
    constant,
    lemma_coefficient,
    log_geometric,
    ps_add,
    ps_div,
    ps_inverse,
    ps_monomial_shift,
    ps_mul,
    ps_pow,
    series,
)


def geometric(order: int) -> PowerSeries:
    return series([1] * (order + 1))


def expand_shifted_geom_power(p: int, q: int, order: int) -> PowerSeries:
    """Brute-force z^p/(1-z)^(q+1): multiply q+1 copies of the geometric
    series, then shift.  Deliberately avoids binom/binomial_series."""
    acc = constant(1, order)
    for _ in range(q + 1):
        acc = ps_mul(acc, geometric(order))
    return ps_monomial_shift(acc, p)


class TestRingOps:
    def test_add(self):
        assert ps_add(series([1, 1]), series([1, -1])).coeffs == (2, 0)
        assert ps_add(series([1, 1, 1]), series([0, 1, 2])).coeffs == (1, 2, 3)

    def test_add_zero_identity(self):
        a = series([3, Fraction(1, 2), 5])
        assert ps_add(a, constant(0, 2)) == a

    def test_mul(self):
        out = ps_mul(series([1, 1]), series([1, -1]))
        assert out.coeffs == (1, 0)
        out = ps_mul(series([1, 1, 0]), series([1, -1, 0]))
        assert out.coeffs == (1, 0, -1)

    def test_mul_one_identity(self):
        a = series([2, 3, Fraction(5, 7)])
        assert ps_mul(a, constant(1, 2)) == a

    def test_geometric_times_one_minus_z(self):
        out = ps_mul(geometric(10), series([1, -1] + [0] * 9))
        assert out.coeffs == (1,) + (0,) * 10

    def test_min_order_rule(self):
        out = ps_mul(series([1, 1, 1, 1]), series([1, 1]))
        assert out.order == 1

    def test_shift(self):
        assert ps_monomial_shift(series([1, 1, 1]), 1).coeffs == (0, 1, 1)

    def test_shift_zero_identity(self):
        a = series([4, 5, 6])
        assert ps_monomial_shift(a, 0) == a

    def test_shift_of_geometric(self):
        for p in range(4):
            shifted = ps_monomial_shift(geometric(10), p)
            for n in range(p, 11):
                assert coefficient(shifted, n) == 1

    def test_shift_rejects_negative(self):
        with pytest.raises(ValueError):
            ps_monomial_shift(series([1]), -1)


class TestCoefficient:
    def test_in_range(self):
        assert coefficient(geometric(8), 5) == 1
        assert coefficient(log_geometric(5), 3) == Fraction(1, 3)

    def test_out_of_range_is_error(self):
        a = geometric(4)
        with pytest.raises(IndexError):
            coefficient(a, 5)
        with pytest.raises(IndexError):
            coefficient(a, -1)


class TestBinomialSeries:
    def test_negative_cube(self):
        # (1-z)^(-3): coefficient of z^2 is C(4, 2)
        assert coefficient(binomial_series(-3, 6, at_minus_z=True), 2) == 6

    def test_zero_exponent(self):
        assert binomial_series(0, 5).coeffs == (1, 0, 0, 0, 0, 0)

    def test_sqrt_squares_back(self):
        root = binomial_series(Fraction(1, 2), 12)
        assert ps_mul(root, root).coeffs == (1, 1) + (0,) * 11

    def test_geometric_agrees(self):
        assert binomial_series(-1, 9, at_minus_z=True) == geometric(9)


class TestLogGeometric:
    def test_coefficients(self):
        s = log_geometric(8)
        assert coefficient(s, 0) == 0
        assert coefficient(s, 4) == Fraction(1, 4)
        assert coefficient(s, 7) == Fraction(1, 7)

    def test_times_one_minus_z(self):
        n = 12
        out = ps_mul(log_geometric(n), series([1, -1] + [0] * (n - 1)))
        for k in range(2, n + 1):
            assert coefficient(out, k) == Fraction(1, k) - Fraction(1, k - 1)


class TestLemmaCoefficient:
    def test_worked_value(self):
        assert lemma_coefficient(2, 3, 5) == 20
        assert coefficient(expand_shifted_geom_power(2, 3, 8), 5) == 20

    def test_geometric_case(self):
        for n in range(10):
            assert lemma_coefficient(0, 0, n) == 1

    def test_collapsed_form_value(self):
        assert lemma_coefficient(2, 5, 6) == 126
        assert coefficient(expand_shifted_geom_power(2, 5, 8), 6) == 126

    def test_vanishes_below_shift(self):
        assert lemma_coefficient(4, 2, 3) == 0

    def test_against_expansion_grid(self):
        for p in range(0, 9):
            for q in range(0, 9):
                brute = expand_shifted_geom_power(p, q, 24)
                alt = ps_monomial_shift(
                    binomial_series(-q - 1, 24, at_minus_z=True), p
                )
                for n in range(p, 25):
                    expected = lemma_coefficient(p, q, n)
                    assert coefficient(brute, n) == expected
                    assert coefficient(alt, n) == expected


small_rationals = st.fractions(
    min_value=Fraction(-5), max_value=Fraction(5), max_denominator=6
)
random_series = st.lists(small_rationals, min_size=1, max_size=17).map(series)


@given(a=random_series, b=random_series)
def test_mul_commutes(a, b):
    assert ps_mul(a, b) == ps_mul(b, a)


@given(a=random_series, b=random_series, c=random_series)
@settings(max_examples=60)
def test_mul_associates(a, b, c):
    assert ps_mul(ps_mul(a, b), c) == ps_mul(a, ps_mul(b, c))


@given(a=random_series, b=random_series, c=random_series)
@settings(max_examples=60)
def test_mul_distributes(a, b, c):
    assert ps_mul(a, ps_add(b, c)) == ps_add(ps_mul(a, b), ps_mul(a, c))


@given(a=small_rationals, b=small_rationals)
@settings(max_examples=40)
def test_binomial_series_multiplicative(a, b):
    n = 10
    lhs = ps_mul(binomial_series(a, n), binomial_series(b, n))
    assert lhs == binomial_series(a + b, n)


class TestDivisionAndPowers:
    def test_inverse_of_one_minus_z(self):
        assert ps_inverse(series([1, -1] + [0] * 8)) == geometric(9)

    def test_inverse_needs_unit_constant(self):
        with pytest.raises(SeriesDomainError):
            ps_inverse(series([0, 1]))

    def test_div_factors_common_z_power(self):
        # z^2 / z = z
        out = ps_div(series([0, 0, 1, 0]), series([0, 1, 0, 0]))
        assert out.coeffs[:2] == (0, 1)

    def test_div_rejects_negative_powers(self):
        with pytest.raises(SeriesDomainError):
            ps_div(constant(1, 4), series([0, 1, 0, 0, 0]))

    def test_pow_negative_integer(self):
        out = ps_pow(series([1, -1] + [0] * 8), -1)
        assert out == geometric(9)

    def test_pow_half(self):
        root = ps_pow(series([1, 1] + [0] * 10), Fraction(1, 2))
        assert root == binomial_series(Fraction(1, 2), 11)

    def test_pow_of_scaled_constant(self):
        out = ps_pow(constant(Fraction(9, 4), 3), Fraction(1, 2))
        assert out.coeffs[0] == Fraction(3, 2)

    def test_pow_irrational_rejected(self):
        with pytest.raises(SeriesDomainError):
            ps_pow(constant(2, 3), Fraction(1, 2))
