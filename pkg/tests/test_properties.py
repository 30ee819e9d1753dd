from dataclasses import replace

import numpy as np
from hypothesis import given, seed, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from src.berezin.iterate import berezin_field
from src.berezin.operator import berezin_of_matrix
from src.berezin.quadrature import DiscQuadrature, choose_quadrature
from src.berezin.series import berezin_monomial_series
from src.berezin.transform import berezin, berezin_quad_estimate
from src.geometry.conditions import margin_values
from src.geometry.sufficiency import multiplier_tail_bound
from src.models.grid import DiskGrid, GridField
from src.models.quadrature import QuadratureSpec
from src.models.truncation import ToeplitzTruncation
from src.symbols.base import BaseSymbol
from src.symbols.harmonic import HarmonicPolynomial
from src.symbols.modulus import modulus_of
from src.toeplitz.matrices import matrix_harmonic

PROPERTY_SEED = 20240101
PROPERTY_SETTINGS = settings(max_examples=1000, deadline=None)

JENSEN_GRID = DiskGrid.build(3, 8)
JENSEN_SPEC = QuadratureSpec(radial_order=8, angular_count=16, radial_variable="r", adaptive=False)
TRIANGLE_SPEC = QuadratureSpec(radial_order=32, angular_count=64, radial_variable="r", adaptive=False)

bounded = st.floats(min_value=-5.0, max_value=5.0, allow_nan=False, allow_infinity=False)


@st.composite
def disc_points(draw, max_radius=0.9):
    radius = draw(st.floats(min_value=0.0, max_value=max_radius))
    angle = draw(st.floats(min_value=0.0, max_value=2.0 * np.pi))
    return complex(radius * np.exp(1j * angle))


@st.composite
def coefficients(draw):
    modulus = draw(st.floats(min_value=0.05, max_value=2.0))
    angle = draw(st.floats(min_value=0.0, max_value=2.0 * np.pi))
    return complex(modulus * np.exp(1j * angle))


@st.composite
def harmonic_polynomials(draw, max_degree=4):
    exponents = st.lists(st.integers(min_value=1, max_value=max_degree), max_size=3, unique=True)
    analytic = {m: draw(coefficients()) for m in sorted(draw(exponents))}
    coanalytic = {n: draw(coefficients()) for n in sorted(draw(exponents))}
    return HarmonicPolynomial.from_coefficients(draw(coefficients()), analytic, coanalytic)


@st.composite
def parabolic_fields(draw):
    """Values a + ib on JENSEN_GRID with a >= delta b^2"""
    count = JENSEN_GRID.node_count
    delta = draw(st.floats(min_value=0.01, max_value=1.0))
    imaginary = draw(arrays(np.float64, count, elements=bounded))
    surplus = draw(arrays(np.float64, count, elements=st.floats(min_value=0.0, max_value=5.0)))
    return delta, GridField(JENSEN_GRID, delta * imaginary ** 2 + surplus + 1j * imaginary)


class ParabolicSymbol(BaseSymbol):
    """surplus + delta v^2 + i v for a real-valued harmonic polynomial v"""

    def __init__(self, imaginary_part: HarmonicPolynomial, delta: float, surplus: float):
        self.imaginary_part, self.delta, self.surplus = imaginary_part, delta, surplus

    def evaluate_array(self, points):
        v = self.imaginary_part.evaluate_array(points).real
        return self.surplus + self.delta * v ** 2 + 1j * v

    def describe(self):
        return f"{self.surplus} + {self.delta} v^2 + i v, v = {self.imaginary_part.describe()}"

    @property
    def prefers_r_rule(self):
        return True

    def trig_degree(self):
        return 2 * self.imaginary_part.trig_degree()

    def polynomial_degree(self):
        return 2 * self.imaginary_part.polynomial_degree()

    def slack(self, est_error: float = 0.0) -> float:
        """Rounding and truncation allowance for Re B >= delta (Im B)^2"""
        bound = self.imaginary_part.coefficient_bound()
        scale = 1.0 + self.surplus + self.delta * bound ** 2
        return 1e-8 * scale + est_error * (1.0 + 2.0 * self.delta * bound)


@st.composite
def parabolic_symbols(draw):
    delta = draw(st.floats(min_value=0.01, max_value=1.0))
    surplus = draw(st.floats(min_value=0.0, max_value=2.0))
    exponents = draw(st.lists(st.integers(min_value=1, max_value=3), min_size=1, max_size=2, unique=True))
    analytic = {m: draw(coefficients()) for m in sorted(exponents)}
    # konjugierte Koeffizienten: v = p0 + 2 Re sum c_m z^m ist reell
    coanalytic = {m: c.conjugate() for m, c in analytic.items()}
    imaginary_part = HarmonicPolynomial.from_coefficients(draw(st.integers(min_value=-2, max_value=2)),
                                                          analytic, coanalytic)
    return ParabolicSymbol(imaginary_part, delta, surplus)


@seed(PROPERTY_SEED)
@PROPERTY_SETTINGS
@given(parabolic_fields())
def test_berezin_step_preserves_parabolic_condition(case):
    delta, field = case
    result = berezin_field(field, JENSEN_SPEC)
    assert np.min(margin_values(result.values, delta)) >= -1e-8


@seed(PROPERTY_SEED)
@PROPERTY_SETTINGS
@given(symbol=parabolic_symbols(), z=disc_points(max_radius=0.95))
def test_kernel_quadrature_preserves_parabolic_condition(symbol, z):
    spec = replace(choose_quadrature(symbol, z, 1e-9), strict=False)
    result = berezin_quad_estimate(symbol, z, spec, max_doublings=3)
    margin = result.value.real - symbol.delta * result.value.imag ** 2
    assert margin >= -symbol.slack(result.est_error)


@seed(PROPERTY_SEED)
@PROPERTY_SETTINGS
@given(symbol=parabolic_symbols(), z=disc_points(max_radius=0.95))
def test_series_route_preserves_parabolic_condition(symbol, z):
    v = symbol.imaginary_part
    imaginary = berezin(v, z, route="series").value.real
    terms = list(v.monomials())
    square = sum(
        c1 * c2 * berezin_monomial_series(a1 + a2, b1 + b2, z)
        for a1, b1, c1 in terms
        for a2, b2, c2 in terms
    )
    margin = symbol.surplus + symbol.delta * square.real - symbol.delta * imaginary ** 2
    assert margin >= -symbol.slack()


@seed(PROPERTY_SEED)
@PROPERTY_SETTINGS
@given(
    size=st.integers(min_value=1, max_value=8),
    data=st.data(),
    z=disc_points(max_radius=0.95),
)
def test_matrix_berezin_is_bounded_by_norm(size, data, z):
    real = data.draw(arrays(np.float64, (size, size), elements=bounded))
    imag = data.draw(arrays(np.float64, (size, size), elements=bounded))
    truncation = ToeplitzTruncation(real + 1j * imag, "quadrature", "random")
    result = berezin_of_matrix(truncation, z)
    sigma_max = result.detail["sigma_max"]
    assert abs(result.value) <= sigma_max + result.est_error + 1e-12


@seed(PROPERTY_SEED)
@PROPERTY_SETTINGS
@given(polynomial=harmonic_polynomials(), z=disc_points())
def test_berezin_of_modulus_dominates(polynomial, z):
    tol = TRIANGLE_SPEC.tolerance
    value = berezin_quad_estimate(polynomial, z, TRIANGLE_SPEC).value
    modulus = berezin_quad_estimate(modulus_of(polynomial), z, TRIANGLE_SPEC).value
    assert modulus.real >= abs(value) - 2.0 * tol


@seed(PROPERTY_SEED)
@PROPERTY_SETTINGS
@given(polynomial=harmonic_polynomials(), n=st.integers(min_value=1, max_value=24))
def test_conjugate_symbol_gives_adjoint(polynomial, n):
    np.testing.assert_array_equal(matrix_harmonic(polynomial.conjugate_swap(), n).entries,
                                  matrix_harmonic(polynomial, n).entries.conj().T)


@seed(PROPERTY_SEED)
@PROPERTY_SETTINGS
@given(
    n=st.integers(min_value=0, max_value=8),
    r=st.sampled_from([0.3, 0.5, 0.7]),
    real=arrays(np.float64, 6, elements=bounded),
    imag=arrays(np.float64, 6, elements=bounded),
)
def test_multiplier_tail_bound(n, r, real, imag):
    # f = sum a_k sqrt(k+1) w^k, k = n..n+5, liegt in A_n
    a = real + 1j * imag
    a[0] += 1.0
    k = np.arange(n, n + 6)
    rule = DiscQuadrature(16, 64, radius=r)
    values = (np.vander(rule.nodes, n + 6, increasing=True)[:, k] * np.sqrt(k + 1.0)) @ a
    restricted = np.sqrt(rule.integrate(np.abs(values) ** 2).real)
    norm = np.linalg.norm(a)
    assert restricted <= multiplier_tail_bound(r, n) * norm * (1.0 + 1e-12)
