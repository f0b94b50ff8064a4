"""Tests for grids, reports, and the certificate operations."""

import math

import numpy as np
import pytest

from harmonic_shear.analysis import (
    SampleGrid,
    TAU,
    bound_expression,
    boundary_extrema_count,
    convexity_check,
    counterexample_search,
    default_grid,
    direction_convexity_certificate,
    rz_check,
    sup_modulus,
    theorem_bound,
    verify_monomial_theorem,
)
from harmonic_shear.convolve import harmonic_convolve, omega1_monomial
from harmonic_shear.mappings import (
    HarmonicMap,
    KernelParams,
    generalized_half_plane_map,
    phi_series,
    right_half_plane_map,
    shear_construct,
    slanted_strip_map,
)
from harmonic_shear.series import TruncatedSeries


class TestSampleGrid:
    def test_default(self):
        grid = default_grid()
        assert grid.r_max == 0.995
        assert grid.size == 12 * 720
        assert grid.points.size == grid.size

    def test_capped(self):
        capped = default_grid().capped()
        assert capped.r_max == 0.9

    def test_validation(self):
        with pytest.raises(ValueError):
            SampleGrid((0.5, 0.4), 720)
        with pytest.raises(ValueError):
            SampleGrid((0.5, 1.0), 720)
        with pytest.raises(ValueError):
            SampleGrid((0.5,), 4)


class TestSupModulus:
    def test_linear_dilatation(self):
        grid = SampleGrid((0.5, 0.99), 720)
        report = sup_modulus(TruncatedSeries.from_coefficients([0, -1]), grid)
        assert report.passed
        assert report.extremal_value == pytest.approx(0.99)
        assert abs(report.witness) == pytest.approx(0.99)

    def test_zero_map_passes(self):
        report = sup_modulus(TruncatedSeries.zero(4), default_grid())
        assert report.passed
        assert report.extremal_value == 0.0

    def test_unimodular_counterexample_fails(self):
        md = omega1_monomial(1.0, 3, 0.0, 0.0)
        report = sup_modulus(md, default_grid())
        assert not report.passed
        assert report.extremal_value > 1.0
        assert abs(md(report.witness)) == pytest.approx(report.extremal_value)

    def test_witness_attains_extremal(self):
        f = TruncatedSeries.from_coefficients([0, 0.3, 0.2])
        report = sup_modulus(f, default_grid())
        assert abs(f(report.witness)) == pytest.approx(report.extremal_value)


class TestConvexityCheck:
    def test_kernel_value_at_origin(self):
        phi = phi_series(KernelParams(0.0, math.pi / 2), 64)
        d1, d2 = phi.differentiate(), phi.differentiate().differentiate()
        assert (1 + 0 * d2(0j) / d1(0j)).real == pytest.approx(1.0)

    def test_random_kernels_pass(self):
        rng = np.random.default_rng(20)
        grid = SampleGrid((0.4, 0.7, 0.9), 240)
        for _ in range(20):
            phi = phi_series(KernelParams(rng.uniform(0, 2 * math.pi), rng.uniform(0, math.pi)), 256)
            assert convexity_check(phi, grid).passed

    def test_non_convex_polynomial_fails(self):
        phi = TruncatedSeries.from_coefficients([0, 1, 1], order=8)
        report = convexity_check(phi, SampleGrid((0.35, 0.45, 0.6), 720))
        assert not report.passed
        assert report.criterion == "convexity"
        assert report.extremal_value < 0

    def test_derivative_vanishing_reported(self):
        # phi' = 1 + 2z vanishes at the grid point -0.5 exactly
        phi = TruncatedSeries.from_coefficients([0, 1, 1], order=8)
        report = convexity_check(phi, SampleGrid((0.5,), 720))
        assert not report.passed
        assert report.criterion == "derivative-vanishes"
        assert report.witness == pytest.approx(-0.5)

    def test_capped_at_series_radius(self):
        report = convexity_check(TruncatedSeries.geometric(256), default_grid())
        assert report.samples_checked == 9 * 720


class TestRzCheck:
    def test_identity_on_geometric(self):
        # truncation tail at r <= 0.8 is far below the identity tolerance
        grid = SampleGrid((0.3, 0.6, 0.8), 240)
        report = rz_check(TruncatedSeries.geometric(256), 0.0, 0.0, 0.0, grid)
        assert report.passed
        assert report.extremal_value == pytest.approx(1.0, abs=1e-10)

    def test_cancellation_identity_on_kernel(self):
        # the expression at (gamma, mu, nu) = (-mu0, -mu0, nu0) is exactly 1
        rng = np.random.default_rng(21)
        grid = SampleGrid((0.3, 0.6, 0.8), 240)
        for _ in range(10):
            mu0 = rng.uniform(0, 2 * math.pi)
            nu0 = rng.uniform(0, math.pi)
            phi = phi_series(KernelParams(mu0, nu0), 256)
            report = rz_check(phi, -mu0, -mu0, nu0, grid)
            assert report.passed
            assert report.extremal_value == pytest.approx(1.0, abs=1e-10)
            # also exactly 1 from above: the maximum matches
            pts = grid.capped().points
            quad = 1 - 2 * pts * np.exp(-1j * (-mu0)) * np.cos(nu0) + pts**2 * np.exp(-2j * (-mu0))
            vals = (quad * phi.differentiate()(pts)).real
            assert np.max(np.abs(vals - 1.0)) < 1e-10

    def test_identity_map_quarter_nu(self):
        gamma = 0.8
        report = rz_check(TruncatedSeries.from_coefficients([0, 1], order=4), gamma, gamma, math.pi / 2, default_grid())
        assert report.passed
        # min Re(1 + z^2 e^{-2i gamma}) = 1 - r_max^2 up to angular quantization
        assert report.extremal_value == pytest.approx(1 - 0.81, abs=1e-3)


class TestDirectionCertificate:
    def test_half_plane_real_direction(self):
        report = direction_convexity_certificate(right_half_plane_map(256), 0.0)
        assert report.passed
        assert report.criterion == "direction-convexity"
        assert report.details["mu"] == pytest.approx(0.0)
        assert report.details["nu"] == pytest.approx(0.0)

    def test_analytic_strip_any_direction(self):
        f = slanted_strip_map(2 * math.pi / 3, 0.0, TruncatedSeries.zero(256), 256)
        for gamma in (0.0, 0.9):
            report = direction_convexity_certificate(f, gamma)
            assert report.passed, report

    def test_dilatation_precondition(self):
        f = HarmonicMap(
            TruncatedSeries.from_coefficients([0, 1], order=8),
            TruncatedSeries.from_coefficients([0, 0, 2], order=8),
        )
        report = direction_convexity_certificate(f, 0.0)
        assert not report.passed
        assert report.criterion == "not-sense-preserving"


class TestBoundaryExtremaCount:
    def test_half_plane_signature(self):
        # h - g is the slit map with coefficients k; sampling at r = 0.95
        # needs order ~1024 before the truncation tail stops fluttering the
        # flat side of the image curve
        assert boundary_extrema_count(right_half_plane_map(1024), 0.0, 0.95, 720) == 2

    def test_disk_signature(self):
        f = HarmonicMap(TruncatedSeries.from_coefficients([0, 1], order=4), TruncatedSeries.zero(4))
        for gamma in (0.0, 1.1, 2.7):
            assert boundary_extrema_count(f, gamma, 0.9, 256) == 2

    def test_non_convex_direction_exceeds_two(self):
        f = HarmonicMap(
            TruncatedSeries.from_coefficients([0, 1], order=4),
            TruncatedSeries.from_coefficients([0, 0, 0.5], order=4),
        )
        assert boundary_extrema_count(f, math.pi / 2, 0.95, 720) > 2

    def test_validation(self):
        f = right_half_plane_map(8)
        with pytest.raises(ValueError):
            boundary_extrema_count(f, 0.0, 1.5, 720)
        with pytest.raises(ValueError):
            boundary_extrema_count(f, 0.0, 0.5, 8)


class TestTheoremBound:
    def test_known_values(self):
        assert theorem_bound(1) == 1.0
        assert theorem_bound(2) == 1.0
        assert theorem_bound(3) == pytest.approx(2 - math.sqrt(3), abs=1e-12)
        assert theorem_bound(4) == pytest.approx(3 - 2 * math.sqrt(2), abs=1e-12)

    def test_monotone_and_vanishing(self):
        values = [theorem_bound(n) for n in range(2, 60)]
        assert all(b >= a for a, b in zip(values[1:], values))
        assert values[-1] < 0.01

    def test_root_identity(self):
        for n in range(3, 40):
            t = theorem_bound(n)
            assert t * 2 * (n - 1) < 1 + t * t + 1e-12

    def test_domain_error(self):
        with pytest.raises(ValueError):
            theorem_bound(0)


class TestBoundExpression:
    def test_examples(self):
        assert bound_expression(1.0, 2) == pytest.approx(0.0, abs=1e-14)
        assert bound_expression(0.0, 5) == 1.0
        assert bound_expression(2 - math.sqrt(3), 3) == pytest.approx(0.0, abs=1e-12)

    def test_sign_tracks_admissibility(self):
        for n in range(1, 8):
            b = theorem_bound(n)
            assert bound_expression(0.99 * b, n) > 0
            if n >= 3:
                assert bound_expression(min(1.0, 1.01 * b), n) < 0


class TestVerifyMonomialTheorem:
    def test_unimodular_n1(self):
        report = verify_monomial_theorem(1.0, 1, 0.0, 0.0)
        assert report.passed
        # self-inversive pair: |q| = |p| identically on the circle
        assert abs(report.details["boundary_margin"]) < 1e-9

    def test_interior_n2(self):
        report = verify_monomial_theorem(0.9 * np.exp(1j * math.pi / 5), 2, 1.3, 0.4)
        assert report.passed

    def test_boundary_n3(self):
        report = verify_monomial_theorem(2 - math.sqrt(3), 3, math.pi / 4, math.pi / 3)
        assert report.passed
        assert report.details["boundary_margin"] >= -1e-9

    def test_out_of_range(self):
        report = verify_monomial_theorem(0.5, 3, 0.0, 0.0)
        assert not report.passed
        assert report.criterion == "out-of-theorem-range"

    def test_boundary_margin_properties(self):
        # margin stays above -1e-9 throughout the admissible range, and
        # touches zero at the bound when the circle factor can vanish
        rng = np.random.default_rng(23)
        for _ in range(10):
            n = int(rng.integers(1, 6))
            a = theorem_bound(n) * rng.uniform(0, 1) * np.exp(2j * np.pi * rng.uniform())
            report = verify_monomial_theorem(a, n, rng.uniform(0, 2 * math.pi), rng.uniform(0, math.pi))
            assert report.details["boundary_margin"] >= -1e-9
        pinned = verify_monomial_theorem(theorem_bound(4), 4, 0.8, 0.0)
        assert abs(pinned.details["boundary_margin"]) < 1e-6


class TestCounterexampleSearch:
    def test_root_product_ratios(self):
        assert counterexample_search(3, 0.0, 0.0, 0.0).details["root_product_modulus"] == pytest.approx(1.5, abs=1e-12)
        assert counterexample_search(4, 0.0, 0.0, 0.0).details["root_product_modulus"] == pytest.approx(2.0, abs=1e-12)

    def test_witness_found(self):
        report = counterexample_search(3, math.pi / 2, math.pi / 6, math.pi / 4)
        assert report.passed
        assert report.extremal_value > 1 + TAU
        md = omega1_monomial(np.exp(1j * math.pi / 2), 3, math.pi / 6, math.pi / 4)
        assert abs(md(report.witness)) > 1 + TAU
        assert abs(report.witness) < 1

    def test_requires_high_degree(self):
        with pytest.raises(ValueError):
            counterexample_search(2, 0.0, 0.0, 0.0)


class TestConvolutionDirectionProperty:
    def test_certificate_for_suite_instances(self):
        # convolution with the half-plane map is convex in direction -mu
        # whenever its dilatation certificate passes
        rng = np.random.default_rng(22)
        order = 256
        for _ in range(3):
            mu = rng.uniform(0, 2 * math.pi)
            nu = rng.uniform(0, math.pi)
            n = int(rng.integers(1, 3))
            a = 0.8 * np.exp(2j * np.pi * rng.uniform())
            omega = TruncatedSeries.monomial(n, a, order=order)
            f1 = right_half_plane_map(order)
            f2 = shear_construct(phi_series(KernelParams(mu, nu), order), mu, omega)
            conv = harmonic_convolve(f1, f2)
            report = direction_convexity_certificate(conv, -mu)
            assert report.passed, (mu, nu, n, a, report)

    def test_generalized_variant(self):
        order = 1024
        mu1, mu2, nu = 0.7, 1.9, 0.6
        f1 = generalized_half_plane_map(mu1, order)
        omega = TruncatedSeries.monomial(1, 0.5, order=order)
        f2 = shear_construct(phi_series(KernelParams(mu1 + mu2, nu), order), mu2, omega)
        conv = harmonic_convolve(f1, f2)
        assert boundary_extrema_count(conv, -(mu1 + mu2), 0.95, 720) == 2
