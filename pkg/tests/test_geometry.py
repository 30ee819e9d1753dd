import math
from fractions import Fraction

import numpy as np
import pytest

from src.core.exceptions import ArgumentError, DomainError
from src.geometry.conditions import (
    boundary_extremum,
    disc_condition,
    margin_values,
    parabolic_margin,
    scaling_constant,
    superlevel_set,
)
from src.geometry.pseudohyperbolic import (
    empty_set,
    estimate_normalized_area,
    luecking_density,
    pseudohyperbolic_disc,
    pseudohyperbolic_distance,
    whole_disc,
)
from src.geometry.sufficiency import corollary_check, multiplier_tail_bound, rho_zero, thm_sufficient_check
from src.models.grid import DiskGrid
from src.symbols.harmonic import HarmonicPolynomial


class TestMargins:

    def test_forms(self):
        values = np.array([1.0 + 2.0j, -1.0 + 0.5j])
        np.testing.assert_allclose(margin_values(values, 0.5), [1.0 - 2.0, -1.0 - 0.125])
        np.testing.assert_allclose(margin_values(values, 0.5, "linear"), [0.0, -1.25])
        with pytest.raises(ArgumentError):
            margin_values(values, 0.5, "cubic")

    def test_example_symbol_has_positive_margin(self, example_p, small_grid):
        report = parabolic_margin(example_p, 1.0, small_grid)
        assert report.min_margin > 0.0
        assert report.evidence
        assert report.lipschitz == pytest.approx(1.5 * 7.0)
        assert report.slack == pytest.approx(report.lipschitz * small_grid.covering_radius)

    def test_negative_margin_is_located(self, small_grid):
        report = parabolic_margin(HarmonicPolynomial.constant(-1), 1.0, small_grid)
        assert report.min_margin == -1.0
        assert report.argmin_index == 0
        assert not report.certified

    def test_delta_range(self, example_p, small_grid):
        with pytest.raises(ArgumentError):
            parabolic_margin(example_p, 0.0, small_grid)


def test_scaling_constant(example_p):
    assert scaling_constant(example_p) == 1.0 / 6.0
    assert scaling_constant(HarmonicPolynomial.constant(0)) == 0.5
    assert scaling_constant(HarmonicPolynomial.constant(Fraction(1, 4))) == 0.5


def test_disc_condition(small_grid):
    assert disc_condition(HarmonicPolynomial.constant(1), small_grid) == 0.0
    near_one = HarmonicPolynomial.from_coefficients(1, {1: Fraction(1, 4)})
    assert disc_condition(near_one, small_grid) <= 0.25


def test_boundary_minimum_of_real_part(example_p):
    extremum = boundary_extremum(example_p, 100000, "re", "min")
    assert extremum.value == pytest.approx(23.0 / 16.0, abs=1e-6)
    assert abs(extremum.point.real + 0.25) <= 1e-4
    maximum = boundary_extremum(example_p, 1000, "abs", "max")
    assert maximum.value == pytest.approx(3.0)
    assert maximum.angle == 0.0
    with pytest.raises(ArgumentError):
        boundary_extremum(example_p, 1000, "arg")


def test_superlevel_set(example_r):
    member = superlevel_set(example_r, 0.5)
    points = np.array([0j, np.exp(1j * np.pi / 3)])
    np.testing.assert_array_equal(member(points), [True, False])


class TestPseudohyperbolic:

    def test_distance(self):
        assert pseudohyperbolic_distance(0j, 0.5) == pytest.approx(0.5)
        assert pseudohyperbolic_distance(0.3 + 0.1j, 0.3 + 0.1j) == 0.0
        with pytest.raises(DomainError):
            pseudohyperbolic_distance(1.0, 0.0)

    def test_disc_closed_form(self):
        disc = pseudohyperbolic_disc(0.5, 0.5)
        assert disc.center == pytest.approx(0.4 + 0j)
        assert disc.radius == pytest.approx(0.4)
        centered = pseudohyperbolic_disc(0j, 0.3)
        assert centered.center == 0 and centered.radius == pytest.approx(0.3)

    def test_disc_matches_distance(self):
        w, epsilon = 0.6 - 0.3j, 0.4
        disc = pseudohyperbolic_disc(w, epsilon)
        rng = np.random.default_rng(3)
        points = 0.99 * np.sqrt(rng.random(500)) * np.exp(2j * np.pi * rng.random(500))
        for z in points:
            inside = pseudohyperbolic_distance(complex(z), w) < epsilon
            if abs(abs(z - disc.center) - disc.radius) > 1e-9:
                assert disc.contains(z) == inside

    def test_disc_arguments(self):
        with pytest.raises(DomainError):
            pseudohyperbolic_disc(0.5, 1.0)
        with pytest.raises(DomainError):
            pseudohyperbolic_disc(1.0, 0.5)

    def test_area_estimate(self):
        estimate = estimate_normalized_area(0.3 + 0.2j, 0.5, samples=100000, seed=11)
        assert abs(estimate.estimate - estimate.closed_form) <= 4.0 * estimate.std_error
        assert estimate.seed == 11

    def test_area_estimate_is_reproducible(self):
        first = estimate_normalized_area(0.1, 0.2, samples=5000, seed=5)
        assert estimate_normalized_area(0.1, 0.2, samples=5000, seed=5) == first

    def test_density(self):
        grid = DiskGrid.build(3, 8)
        assert luecking_density(whole_disc, 0.5, grid, samples_per_disc=200).min_ratio == 1.0
        assert luecking_density(empty_set, 0.5, grid, samples_per_disc=200).min_ratio == 0.0
        with pytest.raises(ArgumentError):
            luecking_density(whole_disc, 0.5, grid, samples_per_disc=50)


class TestSufficiency:

    def test_example_symbol_passes(self, example_p, small_grid):
        rho = rho_zero(example_p, 64) / 2.0
        verdict = thm_sufficient_check(example_p, rho, small_grid, resolution=64)
        assert verdict.passed
        assert verdict.lambda_area_upper == 0.0
        assert verdict.certified

    def test_zero_symbol_fails_condition_ii(self, small_grid):
        verdict = thm_sufficient_check(HarmonicPolynomial.constant(0), 0.01, small_grid)
        assert not verdict.passed
        assert verdict.pass_i
        assert not verdict.pass_ii
        assert any("(ii)" in reason for reason in verdict.reasons)

    def test_rho_above_rho0_fails(self, example_p, small_grid):
        verdict = thm_sufficient_check(example_p, 0.5, small_grid, resolution=64)
        assert not verdict.passed
        assert "rho exceeds rho0" in verdict.reasons

    def test_linear_variant_uses_fourth_power(self, example_p, small_grid):
        verdict = thm_sufficient_check(example_p, 0.01, small_grid, variant="linear", resolution=64)
        assert verdict.area_bound == pytest.approx(1e-8)

    def test_arguments(self, example_p, small_grid):
        with pytest.raises(DomainError):
            thm_sufficient_check(example_p, 0.0, small_grid)
        with pytest.raises(ArgumentError):
            thm_sufficient_check(example_p, 0.01, small_grid, variant="cubic")

    def test_corollary(self, example_p, small_grid):
        verdict = corollary_check(example_p, small_grid, resolution=64)
        assert verdict.passed
        assert verdict.rho == pytest.approx(verdict.rho0 / 2.0)

    def test_multiplier_tail_bound(self):
        assert multiplier_tail_bound(0.5, 2) == pytest.approx(0.125 / math.sqrt(0.5))
        with pytest.raises(DomainError):
            multiplier_tail_bound(1.0, 2)
