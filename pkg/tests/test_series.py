"""Unit tests for truncated-series arithmetic."""

import numpy as np
import pytest

from harmonic_shear.errors import DegenerateOrderError, NearSingularDivisionError
from harmonic_shear.series import (
    TruncatedSeries,
    cauchy_product,
    differentiate,
    divide,
    evaluate,
    hadamard,
    integrate,
    linear_combine,
    reciprocal,
)


def ts(*coeffs):
    return TruncatedSeries.from_coefficients(coeffs)


class TestConstruction:
    def test_length_matches_order(self):
        f = ts(0, 1, 1)
        assert f.truncation_order == 2
        assert len(f) == 3

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            ts(0, np.inf)
        with pytest.raises(ValueError):
            ts(np.nan, 1)

    def test_coefficients_are_immutable(self):
        f = ts(0, 1, 2)
        with pytest.raises(ValueError):
            f.coeffs[0] = 5.0

    def test_padding_to_order(self):
        f = TruncatedSeries.from_coefficients([1, 2], order=4)
        assert np.array_equal(f.coeffs, [1, 2, 0, 0, 0])

    def test_geometric_is_all_ones(self):
        f = TruncatedSeries.geometric(4)
        assert np.array_equal(f.coeffs, [0, 1, 1, 1, 1])


class TestLinearCombine:
    def test_additive_identity(self):
        assert np.array_equal(
            linear_combine(1, ts(0, 1, 1), 1, ts(0, 0, 0)).coeffs, [0, 1, 1]
        )

    def test_cancellation(self):
        assert np.array_equal(linear_combine(1, ts(0, 1), -1, ts(0, 1)).coeffs, [0, 0])

    def test_averaging(self):
        assert np.array_equal(
            linear_combine(0.5, ts(0, 1, 2), 0.5, ts(0, 1, 0)).coeffs, [0, 1, 1]
        )

    def test_mixed_orders_truncate_to_min(self):
        out = linear_combine(1, ts(1, 2, 3, 4), 1, ts(1, 1))
        assert out.truncation_order == 1
        assert np.array_equal(out.coeffs, [2, 3])


class TestCauchyProduct:
    def test_polynomial_multiply(self):
        assert np.array_equal(cauchy_product(ts(1, 1, 1), ts(1, 1, 0)).coeffs, [1, 2, 2])

    def test_unit_identity(self):
        f = ts(2, -1, 3, 0.5)
        unit = TruncatedSeries.from_coefficients([1], order=3)
        assert np.array_equal(cauchy_product(f, unit).coeffs, f.coeffs)

    def test_z_squared(self):
        assert np.array_equal(cauchy_product(ts(0, 1, 0), ts(0, 1, 0)).coeffs, [0, 0, 1])


class TestHadamard:
    def test_geometric_is_identity_on_vanishing_constant(self):
        rng = np.random.default_rng(1)
        for _ in range(20):
            c = rng.standard_normal(17) + 1j * rng.standard_normal(17)
            c[0] = 0.0
            f = TruncatedSeries(c)
            out = hadamard(TruncatedSeries.geometric(16), f)
            assert np.array_equal(out.coeffs, f.coeffs)

    def test_identity_case(self):
        assert np.array_equal(hadamard(ts(0, 1, 2, 3), ts(0, 1, 1, 1)).coeffs, [0, 1, 2, 3])

    def test_termwise_product(self):
        out = hadamard(ts(0, 1, 4, 9), ts(0, 1, 0.5, 1 / 3))
        assert np.allclose(out.coeffs, [0, 1, 2, 3], rtol=0, atol=1e-15)

    def test_commutative_associative(self):
        # operand order changes the complex product by at most one ulp
        rng = np.random.default_rng(2)
        for _ in range(10):
            f, g, h = (
                TruncatedSeries(rng.standard_normal(9) + 1j * rng.standard_normal(9))
                for _ in range(3)
            )
            assert np.allclose(hadamard(f, g).coeffs, hadamard(g, f).coeffs, rtol=5e-16)
            assert np.allclose(
                hadamard(hadamard(f, g), h).coeffs,
                hadamard(f, hadamard(g, h)).coeffs,
                rtol=5e-15,
            )


class TestCalculus:
    def test_derivative_of_geometric(self):
        assert np.array_equal(differentiate(ts(0, 1, 1, 1)).coeffs, [1, 2, 3])

    def test_derivative_of_constant_fails(self):
        with pytest.raises(DegenerateOrderError):
            differentiate(ts(5))

    def test_derivative_of_z_squared(self):
        assert np.array_equal(differentiate(ts(0, 0, 1)).coeffs, [0, 2])

    def test_integral_examples(self):
        assert np.allclose(integrate(ts(1, 0, -1)).coeffs, [0, 1, 0, -1 / 3], rtol=1e-15)
        assert np.array_equal(integrate(ts(0, 0)).coeffs, [0, 0, 0])
        assert np.array_equal(integrate(ts(1)).coeffs, [0, 1])

    def test_differentiate_undoes_integrate(self):
        rng = np.random.default_rng(3)
        for _ in range(20):
            f = TruncatedSeries(rng.standard_normal(33) + 1j * rng.standard_normal(33))
            back = differentiate(integrate(f))
            assert np.allclose(back.coeffs, f.coeffs, rtol=1e-14, atol=0)


class TestReciprocal:
    def test_geometric_series(self):
        assert np.array_equal(reciprocal(ts(1, -1, 0, 0)).coeffs, [1, 1, 1, 1])

    def test_constant(self):
        assert np.array_equal(reciprocal(ts(2)).coeffs, [0.5])

    def test_zero_constant_term_fails(self):
        with pytest.raises(NearSingularDivisionError):
            reciprocal(ts(0, 1, 1))

    def test_product_with_reciprocal_is_unit(self):
        # coefficient growth in 1/f amplifies round-off; unit-bounded draws
        # at order 10 keep the recurrence comfortably inside 1e-10
        rng = np.random.default_rng(4)
        for _ in range(50):
            c = rng.uniform(0, 1, 11) * np.exp(2j * np.pi * rng.uniform(size=11))
            c[0] = (0.5 + rng.uniform(0, 0.5)) * np.exp(2j * np.pi * rng.uniform())
            f = TruncatedSeries(c)
            unit = cauchy_product(f, reciprocal(f)).coeffs
            assert abs(unit[0] - 1.0) < 1e-10
            assert np.max(np.abs(unit[1:])) < 1e-10

    def test_divide(self):
        f, g = ts(0, 1, 1, 1), ts(1, 1, 0, 0)
        out = divide(f, g)
        # z(1+z+z^2)/(1+z) = z - z^2/... just check g*out == f
        assert np.allclose(cauchy_product(g, out).coeffs, f.coeffs, atol=1e-14)


class TestEvaluate:
    def test_geometric_closed_form(self):
        f = TruncatedSeries.geometric(64)
        assert abs(evaluate(f, 0.5) - 1.0) < 1e-12

    def test_value_at_origin_is_constant_term(self):
        f = ts(3.5 - 2j, 1, 4)
        assert evaluate(f, 0.0) == 3.5 - 2j

    def test_identity_series(self):
        assert evaluate(ts(0, 1), 0.5j) == 0.5j

    def test_array_input(self):
        f = ts(1, 1)
        z = np.array([0.1, 0.2 + 0.3j])
        assert np.allclose(evaluate(f, z), 1 + z)

    def test_linearity(self):
        rng = np.random.default_rng(5)
        for _ in range(20):
            f = TruncatedSeries(rng.standard_normal(11) + 1j * rng.standard_normal(11))
            g = TruncatedSeries(rng.standard_normal(11) + 1j * rng.standard_normal(11))
            a, b = complex(rng.standard_normal(), rng.standard_normal()), complex(
                rng.standard_normal(), rng.standard_normal()
            )
            z = 0.8 * np.exp(2j * np.pi * rng.uniform())
            lhs = evaluate(linear_combine(a, f, b, g), z)
            rhs = a * evaluate(f, z) + b * evaluate(g, z)
            assert abs(lhs - rhs) < 1e-12


class TestOperators:
    def test_add_sub_scale(self):
        f, g = ts(0, 1, 2), ts(0, 1, 1)
        assert np.array_equal((f + g).coeffs, [0, 2, 3])
        assert np.array_equal((f - g).coeffs, [0, 0, 1])
        assert np.array_equal((2 * f).coeffs, [0, 2, 4])
        assert np.array_equal((-f).coeffs, [0, -1, -2])

    def test_mul_dispatch(self):
        f = ts(1, 1)
        assert np.array_equal((f * f).coeffs, [1, 2])
        assert np.array_equal((f * 3).coeffs, [3, 3])

    def test_z_times_derivative(self):
        f = ts(5, 1, 2, 3)
        assert np.array_equal(f.z_times_derivative().coeffs, [0, 1, 4, 9])
