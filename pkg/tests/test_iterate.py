import numpy as np
import pytest

from src.berezin.iterate import berezin_field, iterate_berezin
from src.berezin.poisson import poisson_extend, poisson_extend_array
from src.core.exceptions import ArgumentError, DomainError
from src.geometry.conditions import margin_values
from src.models.grid import DiskGrid, GridField
from src.models.quadrature import QuadratureSpec
from src.symbols.boundary import BoundarySamples, TrigPolynomial

SMALL_SPEC = QuadratureSpec(radial_order=32, angular_count=128, radial_variable="r", adaptive=False)


@pytest.fixture
def grid():
    return DiskGrid.build(6, 32)


class TestIterate:

    def test_zero_steps_returns_field(self, grid):
        field = GridField(grid, np.arange(grid.node_count))
        assert iterate_berezin(field, 0) is field

    @pytest.mark.parametrize("n", [-1, True, 1.5])
    def test_invalid_counts(self, grid, n):
        field = GridField(grid, np.zeros(grid.node_count))
        with pytest.raises(ArgumentError):
            iterate_berezin(field, n)

    def test_constants_are_fixed(self, grid):
        field = GridField(grid, np.full(grid.node_count, 2.0 - 1.0j))
        result = iterate_berezin(field, 2, SMALL_SPEC)
        np.testing.assert_allclose(result.values, 2.0 - 1.0j, atol=1e-12)

    def test_parabolic_condition_is_preserved(self, grid, example_p):
        field = GridField(grid, example_p.evaluate_array(grid.nodes))
        assert np.min(margin_values(field.values, 1.0)) >= 0.0
        result = iterate_berezin(field, 3, SMALL_SPEC)
        assert np.min(margin_values(result.values, 1.0)) >= -1e-12

    def test_single_step_stays_in_value_range(self, grid):
        values = np.abs(grid.nodes) ** 2
        result = berezin_field(GridField(grid, values), SMALL_SPEC)
        assert np.all(result.values.real >= -1e-12)
        assert np.all(result.values.real <= 1.0 + 1e-12)
        np.testing.assert_allclose(result.values.imag, 0.0, atol=1e-12)


class TestPoisson:

    @pytest.mark.parametrize("z", [0j, 0.5, -0.3 + 0.7j])
    def test_trig_polynomial_extends_to_harmonic(self, example_p, z):
        data = TrigPolynomial.from_harmonic(example_p)
        assert poisson_extend(data, z) == pytest.approx(example_p.evaluate(z), abs=1e-14)

    def test_samples(self):
        data = BoundarySamples.from_function(lambda w: w + 2.0 * np.conj(w) ** 2, 256)
        points = np.array([0.3, 0.2 - 0.4j])
        np.testing.assert_allclose(poisson_extend_array(data, points), points + 2.0 * np.conj(points) ** 2, atol=1e-12)

    def test_constant_samples(self):
        data = BoundarySamples(np.full(16, 3.0))
        assert poisson_extend(data, 0.9j) == pytest.approx(3.0)

    def test_errors(self):
        with pytest.raises(DomainError):
            poisson_extend(TrigPolynomial.constant(1.0), 1.0)
        with pytest.raises(ArgumentError):
            poisson_extend_array([1.0, 2.0], np.array([0.1]))
