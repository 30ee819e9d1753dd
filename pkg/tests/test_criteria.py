import math

import numpy as np
import pytest

from src.config import AppSettings
from src.core.exceptions import ArgumentError, HypothesisError
from src.douglas.boundary import boundary_zeros
from src.douglas.criteria import (
    boundary_criterion,
    fredholm_equiv_check,
    iterated_berezin_criterion,
    powered_poisson_criterion,
)
from src.geometry.conditions import margin_values
from src.models.grid import DiskGrid
from src.models.quadrature import QuadratureSpec
from src.models.verdict import Outcome
from src.symbols.boundary import BoundarySamples, TrigPolynomial
from src.symbols.harmonic import HarmonicPolynomial
from src.symbols.modulus import modulus_of

SMALL_SPEC = QuadratureSpec(radial_order=32, angular_count=128, radial_variable="r", adaptive=False)


class TestBoundaryZeros:

    def test_simple_zeros(self, example_r):
        zeros = boundary_zeros(TrigPolynomial.from_harmonic(example_r))
        np.testing.assert_allclose(zeros, [math.pi / 3, math.pi, 5 * math.pi / 3], atol=1e-9)

    def test_double_zero_is_merged(self):
        # 1 + cos t
        zeros = boundary_zeros(TrigPolynomial(((0, 1.0), (1, 0.5), (-1, 0.5))))
        assert len(zeros) == 1
        assert zeros[0] == pytest.approx(math.pi, abs=1e-6)

    def test_no_zeros(self, example_q, example_p):
        assert boundary_zeros(TrigPolynomial.from_harmonic(example_p)) == []
        assert boundary_zeros(TrigPolynomial.constant(2.0)) == []

    def test_zero_function(self):
        with pytest.raises(ArgumentError):
            boundary_zeros(TrigPolynomial(()))


class TestBoundaryCriterion:

    def test_zero_on_circle(self, example_r):
        verdict = boundary_criterion(example_r)
        assert verdict.outcome is Outcome.NOT_INVERTIBLE
        assert verdict.witness.angle == pytest.approx(math.pi / 3, abs=1e-9)
        assert "Poisson extension" in verdict.notes[0]

    def test_bounded_away_from_zero(self, example_p):
        verdict = boundary_criterion(TrigPolynomial.from_harmonic(example_p))
        assert verdict.outcome is Outcome.INVERTIBLE
        assert verdict.certified
        assert verdict.margin > 1.0

    def test_hypothesis(self):
        with pytest.raises(HypothesisError) as info:
            boundary_criterion(TrigPolynomial(((0, 0.1), (1, 1.0))))
        assert info.value.margin < 0.0
        assert abs(info.value.node) == pytest.approx(1.0)

    def test_samples_are_evidence(self):
        verdict = boundary_criterion(BoundarySamples.from_function(lambda w: 2.0 + w / 2.0, 64))
        assert verdict.outcome is Outcome.INVERTIBLE
        assert verdict.mode == "samples"
        assert not verdict.certified

    def test_wrong_input(self):
        with pytest.raises(ArgumentError):
            boundary_criterion([1.0, 2.0])


class TestFredholm:

    def test_harmonic(self, example_r, example_p, small_grid):
        assert fredholm_equiv_check(example_r, small_grid).outcome is Outcome.NOT_INVERTIBLE
        verdict = fredholm_equiv_check(example_p, small_grid)
        assert verdict.outcome is Outcome.INVERTIBLE
        # min |P| auf dem Rand: |P|^2 = 5/2 + c/2 + 4c^2 + 2c^3 mit c = cos t
        assert verdict.margin == pytest.approx(1.576, abs=1e-2)

    def test_radial(self, radial_p, small_grid):
        verdict = fredholm_equiv_check(radial_p, small_grid)
        assert verdict.outcome is Outcome.INVERTIBLE
        assert verdict.margin == pytest.approx(0.5)

    def test_hypothesis(self, small_grid):
        with pytest.raises(HypothesisError):
            fredholm_equiv_check(HarmonicPolynomial.constant(-1), small_grid)

    def test_needs_continuous_symbol(self, example_p):
        with pytest.raises(ArgumentError):
            fredholm_equiv_check(modulus_of(example_p))


class TestIteratedBerezin:

    def test_invertible(self, example_p):
        verdict = iterated_berezin_criterion(example_p, 2, 0.5, SMALL_SPEC, DiskGrid.build(6, 32))
        assert verdict.outcome is Outcome.INVERTIBLE
        assert verdict.margin >= 0.0
        assert "not a proof" in verdict.notes[0]

    def test_small_symbol_is_inconclusive(self):
        verdict = iterated_berezin_criterion(HarmonicPolynomial.constant(0.1), 1, 0.5, SMALL_SPEC,
                                             DiskGrid.build(4, 16))
        assert verdict.outcome is Outcome.INCONCLUSIVE
        assert verdict.margin == pytest.approx(-0.4)

    def test_harmonic_symbol_is_evaluated_exactly(self, example_p):
        grid = DiskGrid.build(6, 32)
        verdict = iterated_berezin_criterion(example_p, 3, 0.5, SMALL_SPEC, grid)
        margins = margin_values(example_p.evaluate_array(grid.nodes), 0.5)
        assert verdict.margin == float(np.min(margins))
        assert verdict.node == grid.nodes[int(np.argmin(margins))]

    def test_default_grid_comes_from_settings(self, example_p):
        verdict = iterated_berezin_criterion(example_p, 1, 0.5)
        grid = DiskGrid.build(AppSettings.DEFAULT_PROBE_RINGS, AppSettings.DEFAULT_PROBE_ANGLES)
        assert np.min(np.abs(grid.nodes - verdict.node)) == 0.0

    def test_radial_symbol_is_sampled(self, radial_p):
        # min g = 7/16 bei r = 3/4
        verdict = iterated_berezin_criterion(radial_p, 1, 0.3, SMALL_SPEC, DiskGrid.build(6, 32))
        assert verdict.outcome is Outcome.INVERTIBLE

    @pytest.mark.parametrize("n", [-1, True])
    def test_invalid_n(self, example_p, n):
        with pytest.raises(ArgumentError):
            iterated_berezin_criterion(example_p, n, 0.5)


class TestPoweredPoisson:

    def test_invertible(self, example_p):
        verdict = powered_poisson_criterion(example_p, 2, 0.5)
        assert verdict.outcome is Outcome.INVERTIBLE
        assert verdict.margin > 0.0

    def test_radial(self, radial_p):
        assert powered_poisson_criterion(radial_p, 1, 0.3).outcome is Outcome.INVERTIBLE

    def test_small_symbol_is_inconclusive(self):
        verdict = powered_poisson_criterion(HarmonicPolynomial.constant(0.1), 3, 0.5)
        assert verdict.outcome is Outcome.INCONCLUSIVE
