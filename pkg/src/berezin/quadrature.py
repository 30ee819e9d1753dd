import math
from functools import lru_cache
from typing import Tuple

import numpy as np

from ..config import AppSettings, QuadratureConstants
from ..models.quadrature import QuadratureSpec
from ..symbols.base import BaseSymbol


@lru_cache(maxsize=64)
def gauss_legendre_unit(order: int) -> Tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes and weights on [0, 1]"""
    x, w = np.polynomial.legendre.leggauss(order)
    nodes, weights = 0.5 * (x + 1.0), 0.5 * w
    nodes.flags.writeable = False
    weights.flags.writeable = False
    return nodes, weights


class DiscQuadrature:
    """
    Tensor rule for int f dA over the disc of radius ``radius``, with the
    normalized measure dA = r dr dtheta / pi.

    In the variable t = r^2 the rule reads sum_i w_i (1/A) sum_j f(sqrt(t_i) e^{i theta_j});
    in r the radial weights become 2 r_i w_i.
    """

    def __init__(self, radial_order: int, angular_count: int, radius: float = 1.0, radial_variable: str = "t"):
        x, w = gauss_legendre_unit(radial_order)
        if radial_variable == "t":
            t = x * radius ** 2
            radii = np.sqrt(t)
            radial_weights = w * radius ** 2
        else:
            radii = x * radius
            radial_weights = 2.0 * radii * w * radius
        theta = 2.0 * np.pi * np.arange(angular_count) / angular_count
        self.radial_order = radial_order
        self.angular_count = angular_count
        self.radius = radius
        self.radial_variable = radial_variable
        self.nodes = (radii[:, None] * np.exp(1j * theta)[None, :]).ravel()
        self.weights = np.repeat(radial_weights / angular_count, angular_count)

    @classmethod
    def from_spec(cls, spec: QuadratureSpec, radius: float = 1.0) -> "DiscQuadrature":
        return _cached_rule(spec.radial_order, spec.angular_count, radius, spec.radial_variable)

    @property
    def size(self) -> int:
        return int(self.nodes.size)

    def integrate(self, values: np.ndarray) -> complex:
        return complex(np.dot(self.weights, values))

    def integrate_symbol(self, symbol: BaseSymbol) -> complex:
        return self.integrate(symbol.evaluate_array(self.nodes))


@lru_cache(maxsize=32)
def _cached_rule(radial_order: int, angular_count: int, radius: float, radial_variable: str) -> DiscQuadrature:
    return DiscQuadrature(radial_order, angular_count, radius, radial_variable)


def kernel_weights(nodes: np.ndarray, z: complex) -> np.ndarray:
    """|k_z(w)|^2 = (1 - |z|^2)^2 / |1 - w conj(z)|^4"""
    return (1.0 - abs(z) ** 2) ** 2 / np.abs(1.0 - nodes * np.conj(z)) ** 4


def berezin_weights(quadrature: DiscQuadrature, z: complex) -> np.ndarray:
    """Quadrature weights of B(.)(z): |k_z|^2 times the disc weights, all positive"""
    return kernel_weights(quadrature.nodes, complex(z)) * quadrature.weights


def _at_least_power_of_two(value: int, minimum: int) -> int:
    result = minimum
    while result < value:
        result *= 2
    return result


def kernel_degree(z: complex, tolerance: float) -> int:
    """Number of kernel expansion terms above ``tolerance``: |z|^K <= tolerance"""
    x = abs(z)
    if x == 0.0:
        return 0
    return int(math.ceil(math.log(tolerance) / math.log(x)))


def choose_quadrature(symbol: BaseSymbol, z: complex,
                      tolerance: float = AppSettings.DEFAULT_QUADRATURE_TOLERANCE) -> QuadratureSpec:
    """
    Starting rule for the Berezin integral at z.

    Angular count: 2 * (symbol trig degree + K) + 1 rounded up to a power of
    two times 16, where K is the kernel expansion degree |z|^K <= tol.
    Radial order: half the symbol's radial degree plus K / 16 on top of the
    minimum order. Order doubling then decides convergence.
    """
    degree = kernel_degree(z, tolerance)
    angular = _at_least_power_of_two(2 * (symbol.trig_degree() + degree) + 1, QuadratureConstants.MIN_ANGULAR_COUNT)
    radial = QuadratureConstants.MIN_RADIAL_ORDER + (symbol.polynomial_degree() + 3) // 2 + degree // 16
    return QuadratureSpec(
        radial_order=min(radial, QuadratureConstants.MAX_RADIAL_ORDER),
        angular_count=min(angular, QuadratureConstants.MAX_ANGULAR_COUNT),
        tolerance=tolerance,
        radial_variable="r" if symbol.prefers_r_rule else "t",
    )
