import time
from dataclasses import replace
from typing import Optional

import numpy as np

from .quadrature import DiscQuadrature, berezin_weights, choose_quadrature
from .series import (
    berezin_monomial_series,
    berezin_radial_series,
    radial_moments,
    radial_tail_bound,
    required_moment_count,
)
from ..config import AppSettings, DomainConstants, QuadratureConstants
from ..core import berezin_logger
from ..core.exceptions import ArgumentError, DomainError, QuadratureError
from ..models.grid import DiskGrid
from ..models.quadrature import BerezinValue, QuadratureSpec
from ..models.reports import BerezinLowerBound
from ..symbols.base import BaseSymbol
from ..symbols.harmonic import HarmonicPolynomial
from ..symbols.modulus import modulus_of
from ..symbols.radial import RadialSymbol
from ..utils.validators import Validators

ROUTES = ("auto", "quad", "series", "matrix")


def kernel(z: complex, w: complex) -> complex:
    """
    Normalized reproducing kernel k_z(w) = (1 - |z|^2) / (1 - w conj(z))^2.

    Raises:
        DomainError: |z| >= 1, |w| > 1 or w conj(z) = 1
    """
    z = Validators.require_open_disc(z)
    w = Validators.require_closed_disc(w, "w")
    denominator = 1.0 - w * z.conjugate()
    if denominator == 0.0:
        raise DomainError(f"kernel pole at w = {w}, z = {z}")
    return (1.0 - abs(z) ** 2) / denominator ** 2


def _quadrature_value(symbol: BaseSymbol, z: complex, spec: QuadratureSpec) -> complex:
    rule = DiscQuadrature.from_spec(spec)
    return complex(np.dot(berezin_weights(rule, z), symbol.evaluate_array(rule.nodes)))


def _capped_doubling(spec: QuadratureSpec) -> Optional[QuadratureSpec]:
    radial = min(2 * spec.radial_order, QuadratureConstants.MAX_RADIAL_ORDER)
    angular = min(2 * spec.angular_count, QuadratureConstants.MAX_ANGULAR_COUNT)
    if radial == spec.radial_order and angular == spec.angular_count:
        return None
    return replace(spec, radial_order=radial, angular_count=angular)


def berezin_quad_estimate(
    symbol: BaseSymbol,
    z: complex,
    spec: Optional[QuadratureSpec] = None,
    max_doublings: int = QuadratureConstants.MAX_DOUBLINGS,
) -> BerezinValue:
    """
    Berezin transform by tensor quadrature with order doubling.

    Starting from ``spec`` (or the rule chosen for the symbol and z), radial
    order and angular count are doubled until two successive values agree
    within tolerance / 2. The last difference is reported as error estimate.

    Raises:
        DomainError: |z| >= 1
        QuadratureError: |z| above the quadrature limit, or no convergence
            in strict mode
    """
    z = Validators.require_open_disc(z)
    if abs(z) > DomainConstants.QUADRATURE_RADIUS_LIMIT:
        raise QuadratureError(
            f"quadrature refuses |z| = {abs(z)} > {DomainConstants.QUADRATURE_RADIUS_LIMIT}; use the series route"
        )
    if spec is None:
        spec = choose_quadrature(symbol, z)
    elif symbol.prefers_r_rule and spec.radial_variable == "t":
        spec = spec.with_variable("r")

    start = time.perf_counter()
    current = _quadrature_value(symbol, z, spec)
    if not spec.adaptive:
        return BerezinValue(z, current, float("nan"), "quad", _detail(spec, 0))

    error = float("inf")
    for doubling in range(1, max_doublings + 1):
        finer = _capped_doubling(spec)
        if finer is None:
            break
        value = _quadrature_value(symbol, z, finer)
        error = abs(value - current)
        current, spec = value, finer
        if error <= spec.tolerance / 2.0:
            berezin_logger.log_timing(
                "berezin_quad", (time.perf_counter() - start) * 1000.0,
                radial=spec.radial_order, angular=spec.angular_count, error=f"{error:.3e}",
            )
            return BerezinValue(z, current, error, "quad", _detail(spec, doubling))

    message = (
        f"quadrature did not converge at z = {z}: last change {error:.3e} "
        f"> {spec.tolerance / 2.0:.3e} (radial {spec.radial_order}, angular {spec.angular_count})"
    )
    if spec.strict:
        raise QuadratureError(message)
    berezin_logger.warning(message)
    return BerezinValue(z, current, error, "quad", _detail(spec, max_doublings))


def _detail(spec: QuadratureSpec, doublings: int) -> dict:
    return {
        "radial_order": spec.radial_order,
        "angular_count": spec.angular_count,
        "radial_variable": spec.radial_variable,
        "doublings": doublings,
    }


def berezin_quad(symbol: BaseSymbol, z: complex, spec: Optional[QuadratureSpec] = None) -> complex:
    """B(g)(z) = int |k_z(w)|^2 g(w) dA(w) by quadrature"""
    return berezin_quad_estimate(symbol, z, spec).value


def series_available(symbol: BaseSymbol) -> bool:
    return isinstance(symbol, (HarmonicPolynomial, RadialSymbol))


def _series_value(symbol: BaseSymbol, z: complex, tol: float) -> BerezinValue:
    if isinstance(symbol, HarmonicPolynomial):
        terms = list(symbol.monomials())
        share = tol / max(len(terms), 1)
        value, bound = 0j, 0.0
        for a, b, coefficient in terms:
            value += coefficient * berezin_monomial_series(a, b, z, share)
            bound += abs(coefficient) * share
        return BerezinValue(z, value, bound, "series", {"terms": len(terms)})
    if isinstance(symbol, RadialSymbol):
        count = required_moment_count(z, tol, symbol.coefficient_bound())
        moments = radial_moments(symbol, count)
        value = berezin_radial_series(moments, z, tol)
        return BerezinValue(z, complex(value), radial_tail_bound(moments.sup_bound, z, count), "series",
                            {"moments": count})
    raise ArgumentError(f"series route needs a harmonic polynomial or a radial symbol, got {symbol.kind}")


def matrix_dimension(z: complex, tol: float, scale: float) -> int:
    """Smallest N with scale * (2 tau + tau^2) <= tol, tau the kernel tail norm"""
    x = abs(z) ** 2
    for n in range(1, QuadratureConstants.MAX_MATRIX_DIMENSION + 1):
        tau = np.sqrt(x ** n * ((n + 1) * (1.0 - x) + x))
        if scale * (2.0 * tau + tau ** 2) <= tol:
            return n
    raise DomainError(
        f"matrix route would need more than {QuadratureConstants.MAX_MATRIX_DIMENSION} basis vectors at |z| = {abs(z)}"
    )


def _matrix_value(symbol: BaseSymbol, z: complex, tol: float, n: Optional[int]) -> BerezinValue:
    # Lokaler Import: toeplitz baut selbst auf berezin auf
    from ..toeplitz.matrices import build_matrix
    from .operator import berezin_of_matrix

    if n is None:
        n = matrix_dimension(z, tol, symbol.coefficient_bound() or 1.0)
    return berezin_of_matrix(build_matrix(symbol, n), z)


def berezin(
    symbol: BaseSymbol,
    z: complex,
    route: str = "auto",
    tol: float = AppSettings.DEFAULT_QUADRATURE_TOLERANCE,
    n: Optional[int] = None,
    spec: Optional[QuadratureSpec] = None,
) -> BerezinValue:
    """
    Berezin transform of a symbol at z over one of the evaluation routes.

    ``auto`` uses the series forms above |z| = 0.95 when the symbol has one
    and quadrature otherwise; ``matrix`` evaluates <T_N k_z, k_z> on an
    N x N truncation (N chosen from the kernel tail unless given).
    """
    if route not in ROUTES:
        raise ArgumentError(f"unknown route {route!r}, expected one of {', '.join(ROUTES)}")
    z = Validators.require_open_disc(z)
    if route == "auto":
        route = "series" if abs(z) > DomainConstants.SERIES_ROUTE_RADIUS and series_available(symbol) else "quad"
        berezin_logger.debug(f"Route für z={z}: {route}")
    if route == "series":
        return _series_value(symbol, z, tol)
    if route == "matrix":
        return _matrix_value(symbol, z, tol, n)
    if spec is None:
        spec = choose_quadrature(symbol, z, tol)
    return berezin_quad_estimate(symbol, z, spec)


def berezin_abs_lower_bound(
    symbol: BaseSymbol,
    probe_grid: DiskGrid,
    tol: float = 1e-6,
    max_doublings: int = 2,
) -> BerezinLowerBound:
    """
    inf of B(|phi|) over the probe nodes with |z| below the quadrature limit.

    |phi| is evaluated pointwise at the quadrature nodes; the kink at zeros
    of phi slows convergence, so quadrature runs non-strict with few
    doublings and the result is labelled an estimate.
    """
    modulus = modulus_of(symbol)
    nodes = probe_grid.nodes
    inside = np.flatnonzero(np.abs(nodes) <= DomainConstants.QUADRATURE_RADIUS_LIMIT)
    if inside.size == 0:
        raise ArgumentError("probe grid has no node inside the quadrature limit")
    best, argmin, error = float("inf"), 0j, 0.0
    for index in inside:
        z = complex(nodes[index])
        spec = replace(choose_quadrature(modulus, z, tol), strict=False)
        estimate = berezin_quad_estimate(modulus, z, spec, max_doublings)
        value = estimate.value.real
        if value < best:
            best, argmin = value, z
        if np.isfinite(estimate.est_error):
            error = max(error, estimate.est_error)
    berezin_logger.info(f"B(|phi|) >= {best:.6g} (Schätzung) über {inside.size} Stützstellen, Minimum bei {argmin}")
    return BerezinLowerBound(infimum=best, argmin=argmin, probes=int(inside.size), est_error=error)
