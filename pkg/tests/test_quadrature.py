import numpy as np
import pytest

from src.berezin.quadrature import (
    DiscQuadrature,
    berezin_weights,
    choose_quadrature,
    gauss_legendre_unit,
    kernel_degree,
    kernel_weights,
)
from src.core.exceptions import ArgumentError
from src.models.quadrature import QuadratureSpec
from src.symbols.harmonic import HarmonicPolynomial


class TestDiscQuadrature:

    @pytest.mark.parametrize("variable", ["t", "r"])
    def test_normalized_measure(self, variable):
        rule = DiscQuadrature(16, 32, radial_variable=variable)
        assert rule.size == 16 * 32
        assert np.sum(rule.weights) == pytest.approx(1.0, abs=1e-14)
        # int |w|^2 dA = 1/2, int |w|^4 dA = 1/3
        assert rule.integrate(np.abs(rule.nodes) ** 2).real == pytest.approx(0.5, abs=1e-14)
        assert rule.integrate(np.abs(rule.nodes) ** 4).real == pytest.approx(1.0 / 3.0, abs=1e-14)

    def test_angular_moments_vanish(self):
        rule = DiscQuadrature(8, 16)
        assert abs(rule.integrate(rule.nodes ** 3)) <= 1e-15

    def test_smaller_radius(self):
        rule = DiscQuadrature(8, 16, radius=0.5)
        assert np.max(np.abs(rule.nodes)) < 0.5
        assert np.sum(rule.weights) == pytest.approx(0.25)

    def test_gauss_legendre_nodes_are_frozen(self):
        nodes, weights = gauss_legendre_unit(4)
        assert np.all((nodes > 0) & (nodes < 1))
        assert np.sum(weights) == pytest.approx(1.0)
        with pytest.raises(ValueError):
            nodes[0] = 0.5


def test_kernel_weights_at_origin_are_one():
    nodes = np.array([0.2, 0.5j, -0.9])
    np.testing.assert_allclose(kernel_weights(nodes, 0j), 1.0)


def test_berezin_weights_are_positive_and_normalized():
    rule = DiscQuadrature(64, 256)
    weights = berezin_weights(rule, 0.4 - 0.2j)
    assert np.all(weights > 0.0)
    assert np.sum(weights) == pytest.approx(1.0, abs=1e-10)


def test_kernel_degree():
    assert kernel_degree(0j, 1e-10) == 0
    assert kernel_degree(0.5, 1e-3) == 10
    assert 0.9 ** kernel_degree(0.9, 1e-8) <= 1e-8


def test_choose_quadrature(example_p, radial_p):
    z = 0.8
    spec = choose_quadrature(example_p, z, 1e-10)
    assert spec.angular_count >= 2 * (example_p.trig_degree() + kernel_degree(z, 1e-10)) + 1
    assert spec.angular_count % 16 == 0
    assert spec.radial_variable == "t"
    assert choose_quadrature(radial_p, z).radial_variable == "r"
    assert choose_quadrature(HarmonicPolynomial.constant(1), 0j).angular_count == 16


class TestQuadratureSpec:

    def test_rejects_bad_values(self):
        with pytest.raises(ArgumentError):
            QuadratureSpec(radial_order=0)
        with pytest.raises(ArgumentError):
            QuadratureSpec(tolerance=0.0)
        with pytest.raises(ArgumentError):
            QuadratureSpec(radial_variable="s")

    def test_exactness_and_doubling(self):
        spec = QuadratureSpec(radial_order=8, angular_count=16)
        assert spec.exact_for(7)
        assert not spec.exact_for(8)
        doubled = spec.doubled()
        assert (doubled.radial_order, doubled.angular_count) == (16, 32)
        assert spec.with_variable("r").radial_variable == "r"
