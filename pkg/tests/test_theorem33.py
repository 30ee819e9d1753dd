import cmath
import math
from fractions import Fraction

import numpy as np
import pytest

from src.core.exceptions import ArgumentError, TheoremFormError
from src.douglas.theorem33 import decide_theorem33
from src.models.verdict import Outcome
from src.symbols.coefficients import PolarCoefficient
from src.symbols.harmonic import HarmonicPolynomial


def _rotated(argument_over_pi):
    """1 + (i/2) z + (1/2) e^{i pi a} conj(z)"""
    return HarmonicPolynomial.from_coefficients(
        1,
        {1: PolarCoefficient(Fraction(1, 2), Fraction(1, 2))},
        {1: PolarCoefficient(Fraction(1, 2), argument_over_pi)},
    )


class TestExactMode:

    def test_boundary_zero_is_found(self, example_r):
        verdict = decide_theorem33(example_r, "exact")
        assert verdict.outcome is Outcome.NOT_INVERTIBLE
        assert verdict.certified
        assert verdict.basis == "p0=1"
        assert verdict.witness.lambda_over_pi == Fraction(1, 3)
        assert verdict.witness.angle == pytest.approx(math.pi / 3)
        assert verdict.witness.k == {3: 0}
        assert verdict.witness.l == {3: -1}
        assert verdict.witness.residual < 1e-10

    def test_no_common_solution(self, example_q):
        verdict = decide_theorem33(example_q, "exact")
        assert verdict.outcome is Outcome.INVERTIBLE
        assert verdict.witness is None
        assert len(verdict.candidates) == 2
        assert not any(row["survives"] for row in verdict.candidates)

    def test_p0_above_one(self, example_p):
        verdict = decide_theorem33(example_p, "exact")
        assert verdict.outcome is Outcome.INVERTIBLE
        assert verdict.basis == "p0>1"
        assert verdict.invertible

    def test_complex_arguments(self):
        verdict = decide_theorem33(_rotated(Fraction(3, 2)))
        assert verdict.outcome is Outcome.NOT_INVERTIBLE
        assert verdict.witness.lambda_over_pi == Fraction(1, 2)
        assert verdict.witness.k == {1: 0}
        assert verdict.witness.l == {1: 0}
        assert decide_theorem33(_rotated(Fraction(1, 2))).outcome is Outcome.INVERTIBLE

    def test_needs_exact_coefficients(self):
        polynomial = HarmonicPolynomial.from_coefficients(1, {1: 0.5j}, {1: -0.5j})
        with pytest.raises(ArgumentError):
            decide_theorem33(polynomial, "exact")
        assert decide_theorem33(polynomial, "float").outcome is Outcome.NOT_INVERTIBLE


class TestFloatMode:

    def test_agrees_with_exact_mode(self, example_r, example_q):
        verdict = decide_theorem33(example_r, "float")
        assert verdict.outcome is Outcome.NOT_INVERTIBLE
        assert verdict.witness.angle == pytest.approx(math.pi / 3, abs=1e-9)
        assert verdict.witness.lambda_over_pi is None
        assert not verdict.certified
        assert decide_theorem33(example_q, "float").outcome is Outcome.INVERTIBLE

    def test_near_miss_is_inconclusive(self):
        # Residuum 5e-9 liegt in (tol, 10 tol] für tol = 1e-9
        coefficient = cmath.exp(1j * math.pi * 1e-8) / 3.0
        polynomial = HarmonicPolynomial.from_coefficients(1, {3: 2.0 / 3.0}, {3: coefficient})
        verdict = decide_theorem33(polynomial, "float", 1e-9)
        assert verdict.outcome is Outcome.INCONCLUSIVE
        assert verdict.margin == pytest.approx(5e-9, rel=1e-3)

    def test_clear_miss_is_invertible(self):
        coefficient = cmath.exp(1j * math.pi * 1e-6) / 3.0
        polynomial = HarmonicPolynomial.from_coefficients(1, {3: 2.0 / 3.0}, {3: coefficient})
        assert decide_theorem33(polynomial, "float", 1e-9).outcome is Outcome.INVERTIBLE

    def test_tolerance_must_be_positive(self, example_r):
        with pytest.raises(ArgumentError):
            decide_theorem33(example_r, "float", 0.0)


class TestForm:

    @pytest.mark.parametrize("polynomial", [
        HarmonicPolynomial.from_coefficients(1, {1: Fraction(1, 2)}),
        HarmonicPolynomial.from_coefficients(Fraction(1, 2), {1: Fraction(1, 2)}, {2: Fraction(1, 2)}),
        HarmonicPolynomial.from_coefficients(1, {1: Fraction(3, 4)}, {1: Fraction(1, 2)}),
    ])
    def test_rejects_non_normalized(self, polynomial):
        with pytest.raises(TheoremFormError):
            decide_theorem33(polynomial)

    def test_unknown_mode(self, example_r):
        with pytest.raises(ArgumentError):
            decide_theorem33(example_r, "symbolic")

    def test_witness_is_a_zero(self, example_r):
        verdict = decide_theorem33(example_r)
        value = example_r.evaluate_array(np.array([np.exp(1j * verdict.witness.angle)]))[0]
        assert abs(value) < 1e-10
