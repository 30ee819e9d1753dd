from fractions import Fraction
from typing import List, Optional, Union

import numpy as np

from ..berezin.quadrature import DiscQuadrature, gauss_legendre_unit
from ..config import QuadratureConstants
from ..core import toeplitz_logger
from ..core.exceptions import ArgumentError
from ..models.quadrature import QuadratureSpec
from ..models.truncation import ToeplitzTruncation
from ..symbols.base import BaseSymbol
from ..symbols.harmonic import HarmonicPolynomial
from ..symbols.radial import RadialSymbol
from ..utils.validators import Validators

MATRIX_ROUTES = ("auto", "closed", "quad")
EIGENVALUE_ROUTES = ("auto", "exact", "quadrature")


def _require_dimension(n) -> int:
    n = Validators.require_positive_int(n, "N")
    if n > QuadratureConstants.MAX_MATRIX_DIMENSION:
        raise ArgumentError(f"N must not exceed {QuadratureConstants.MAX_MATRIX_DIMENSION}, got {n}")
    return n


def _shift_factor(low: np.ndarray, high: np.ndarray) -> np.ndarray:
    """sqrt((low + 1) / (high + 1)), shared by both triangles so adjoints match bit for bit"""
    return np.sqrt((low + 1.0) / (high + 1.0))


def matrix_harmonic(polynomial: HarmonicPolynomial, n: int) -> ToeplitzTruncation:
    """
    Closed-form N x N section of T_P in the basis e_n = sqrt(n+1) z^n.

    p_m z^m sits on the m-th subdiagonal, (j+m, j) -> p_m sqrt((j+1)/(j+m+1));
    q_n conj(z)^n on the n-th superdiagonal, (j-n, j) -> q_n sqrt((j-n+1)/(j+1)).
    """
    n = _require_dimension(n)
    if polynomial.trig_degree() + 1 > n:
        toeplitz_logger.warning(
            f"N={n} kleiner als Grad+1={polynomial.trig_degree() + 1}; Terme hoher Ordnung fallen heraus"
        )
    entries = np.eye(n, dtype=complex) * polynomial.p0.value
    for term in polynomial.analytic:
        m = term.exponent
        if m < n:
            j = np.arange(n - m)
            entries[j + m, j] += term.coefficient.value * _shift_factor(j, j + m)
    for term in polynomial.coanalytic:
        k = term.exponent
        if k < n:
            j = np.arange(k, n)
            entries[j - k, j] += term.coefficient.value * _shift_factor(j - k, j)
    return ToeplitzTruncation(entries, "closed-form", polynomial.describe(), 0.0)


def radial_eigenvalues(symbol: RadialSymbol, n: int, route: str = "auto") -> List[Union[Fraction, float]]:
    """
    lambda_j = (j+1) * 2 int_0^1 g(r) r^(2j+1) dr for j < N, the diagonal
    of T_g. ``exact`` returns fractions (rational polynomial g only);
    ``quadrature`` integrates in r with Gauss-Legendre, piece by piece for
    sampled g; ``auto`` is exact when possible and uses the closed moment
    formulas otherwise.
    """
    n = Validators.require_positive_int(n, "N")
    if route not in EIGENVALUE_ROUTES:
        raise ArgumentError(f"unknown eigenvalue route {route!r}, expected one of {EIGENVALUE_ROUTES}")
    if route == "exact" or (route == "auto" and symbol.is_exact):
        if not symbol.is_exact:
            raise ArgumentError("exact eigenvalues need a polynomial with rational coefficients")
        return [(j + 1) * symbol.exact_moment(j) for j in range(n)]
    if route == "quadrature":
        moments = _quadrature_moments(symbol, n)
    else:
        moments = symbol.moments(n)
    return [float((j + 1) * moments[j]) for j in range(n)]


def _quadrature_moments(symbol: RadialSymbol, n: int) -> np.ndarray:
    if symbol.is_polynomial:
        breaks = np.array([0.0, 1.0])
        order = (symbol.degree + 2 * n + 2) // 2 + 1
    else:
        breaks = np.unique(np.concatenate(([0.0], symbol.sample_radii, [1.0])))
        order = n + 2
    x, w = gauss_legendre_unit(order)
    j = np.arange(n, dtype=float)[:, None]
    total = np.zeros(n)
    for left, right in zip(breaks[:-1], breaks[1:]):
        r = left + (right - left) * x
        values = symbol.evaluate_radius_array(r)
        total += 2.0 * ((right - left) * w * values * r[None, :] ** (2.0 * j + 1.0)).sum(axis=1)
    return total


def matrix_radial(symbol: RadialSymbol, n: int, route: str = "auto") -> ToeplitzTruncation:
    """Diagonal section of T_g for radial g; off-diagonal entries are exactly zero"""
    n = _require_dimension(n)
    eigenvalues = radial_eigenvalues(symbol, n, route)
    entries = np.diag(np.array([float(value) for value in eigenvalues], dtype=complex))
    return ToeplitzTruncation(entries, "closed-form", symbol.describe(), 0.0)


def default_matrix_spec(symbol: BaseSymbol, n: int) -> QuadratureSpec:
    """A rule that is exact for polynomial symbols of the given degree at dimension N"""
    angular = QuadratureConstants.MIN_ANGULAR_COUNT
    while angular < 2 * (n + symbol.trig_degree()) + 1:
        angular *= 2
    radial = max(QuadratureConstants.MIN_RADIAL_ORDER, n + symbol.polynomial_degree() // 2 + 2)
    return QuadratureSpec(
        radial_order=min(radial, QuadratureConstants.MAX_RADIAL_ORDER),
        angular_count=min(angular, QuadratureConstants.MAX_ANGULAR_COUNT),
        radial_variable="r" if symbol.prefers_r_rule else "t",
        adaptive=False,
    )


def matrix_quadrature(symbol: BaseSymbol, n: int, spec: Optional[QuadratureSpec] = None) -> ToeplitzTruncation:
    """
    entries[i, j] = int phi e_j conj(e_i) dA by tensor quadrature.
    """
    n = _require_dimension(n)
    spec = spec or default_matrix_spec(symbol, n)
    rule = DiscQuadrature.from_spec(spec)
    if not spec.exact_for(n + symbol.trig_degree()):
        toeplitz_logger.warning(
            f"Winkelzahl {spec.angular_count} integriert Frequenz {n + symbol.trig_degree()} nicht exakt"
        )
    basis = np.vander(rule.nodes, n, increasing=True) * np.sqrt(np.arange(1, n + 1, dtype=float))[None, :]
    weighted = (rule.weights * symbol.evaluate_array(rule.nodes))[:, None] * basis
    entries = np.conj(basis).T @ weighted
    toeplitz_logger.debug(
        f"Quadraturmatrix N={n}: {spec.radial_order} x {spec.angular_count} Knoten ({spec.radial_variable})"
    )
    return ToeplitzTruncation(entries, "quadrature", symbol.describe(), None)


def build_matrix(symbol: BaseSymbol, n: int, route: str = "auto", spec: Optional[QuadratureSpec] = None) -> ToeplitzTruncation:
    """Closed form for harmonic polynomials and radial symbols, quadrature otherwise"""
    if route not in MATRIX_ROUTES:
        raise ArgumentError(f"unknown matrix route {route!r}, expected one of {MATRIX_ROUTES}")
    closed_available = isinstance(symbol, (HarmonicPolynomial, RadialSymbol))
    if route == "closed" and not closed_available:
        raise ArgumentError(f"no closed form for {symbol.kind} symbols; use route 'quad'")
    if route == "quad" or not closed_available:
        return matrix_quadrature(symbol, n, spec)
    if isinstance(symbol, HarmonicPolynomial):
        return matrix_harmonic(symbol, n)
    return matrix_radial(symbol, n)
