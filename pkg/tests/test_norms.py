from fractions import Fraction

import numpy as np
import pytest

from src.core.exceptions import ArgumentError
from src.models.grid import DiskGrid
from src.symbols.harmonic import HarmonicPolynomial
from src.symbols.modulus import modulus_of
from src.symbols.norms import check_theorem33_form, sup_norm, theorem33_note
from src.symbols.radial import RadialSymbol
from src.symbols.sampled import SampledSymbol


class TestSupNorm:

    def test_harmonic_bracket_contains_the_maximum(self, example_p):
        bracket = sup_norm(example_p, 64)
        # Maximum bei z = 1
        assert bracket.lower <= 3.0 <= bracket.upper
        assert bracket.upper - bracket.lower <= example_p.lipschitz_constant() * np.pi / (8 * 64) + 1e-15
        assert bracket.certified

    def test_exact_coefficients_close_the_bracket(self, example_p):
        # alle Terme gleichphasig bei z = 1: sup = 2 + 1/2 + 1/2
        bracket = sup_norm(example_p, 64)
        assert bracket.lower == bracket.upper == 3.0

    def test_float_coefficients_keep_the_lipschitz_slack(self):
        polynomial = HarmonicPolynomial.from_coefficients(2, {1: 0.5j}, {2: 0.5j})
        bracket = sup_norm(polynomial, 64)
        assert bracket.upper == pytest.approx(bracket.lower + 1.5 * np.pi / (8 * 64))

    def test_radial_polynomial(self, radial_p):
        lower, upper = sup_norm(radial_p)
        assert lower == pytest.approx(1.0)
        assert upper >= 1.0

    def test_sampled_symbols_are_not_certified(self):
        grid = DiskGrid.build(4, 16)
        values = np.zeros(grid.node_count)
        values[5] = -4.0
        bracket = sup_norm(SampledSymbol(grid, values))
        assert bracket.lower == bracket.upper == 4.0
        assert not bracket.certified

    def test_modulus_uses_inner_bracket(self, example_p):
        assert sup_norm(modulus_of(example_p), 64) == sup_norm(example_p, 64)

    def test_resolution_floor(self, example_p):
        with pytest.raises(ArgumentError):
            sup_norm(example_p, 4)


class TestNormalizedForm:

    def test_branches(self, example_r, example_p):
        assert check_theorem33_form(example_r).branch == "p0=1"
        report = check_theorem33_form(example_p)
        assert report.passed and report.exact and report.branch == "p0>1"

    def test_failures_are_listed(self):
        report = check_theorem33_form(HarmonicPolynomial.from_coefficients(Fraction(1, 2), {1: 1}))
        assert not report.passed
        assert any("below 1" in failure for failure in report.failures)
        report = check_theorem33_form(HarmonicPolynomial.from_coefficients(1, {1: Fraction(1, 2)}))
        assert not report.modulus_sum_is_one

    def test_float_coefficients(self):
        polynomial = HarmonicPolynomial.from_coefficients(1, {1: 0.6j}, {2: 0.4})
        report = check_theorem33_form(polynomial)
        assert not report.exact
        assert report.passed

    def test_exact_check_needs_exact_input(self):
        with pytest.raises(ArgumentError):
            check_theorem33_form(HarmonicPolynomial.from_coefficients(1, {1: 0.6j}, {2: 0.4}), exact=True)

    def test_note_for_small_coefficients(self):
        small = HarmonicPolynomial.from_coefficients(1, {1: Fraction(1, 4)}, {1: Fraction(1, 4)})
        assert "disc condition" in theorem33_note(small)
        assert theorem33_note(HarmonicPolynomial.from_coefficients(1, {1: Fraction(1, 2)}, {1: Fraction(1, 2)})) is None
