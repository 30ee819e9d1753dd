from typing import Callable

import numpy as np

from ..config import AppSettings
from ..core import geometry_logger
from ..core.exceptions import ArgumentError
from ..models.grid import DiskGrid
from ..models.reports import BoundaryExtremum, MarginReport
from ..symbols.base import BaseSymbol
from ..symbols.norms import sup_norm
from ..utils.validators import Validators

MARGIN_FORMS = ("quadratic", "linear")
BOUNDARY_PARTS = {"re": np.real, "im": np.imag, "abs": np.abs}


def margin_values(values: np.ndarray, delta: float, form: str = "quadratic") -> np.ndarray:
    """Re phi - delta (Im phi)^2, or Re phi - delta |Im phi| for the linear form"""
    if form == "quadratic":
        return values.real - delta * values.imag ** 2
    if form == "linear":
        return values.real - delta * np.abs(values.imag)
    raise ArgumentError(f"unknown margin form {form!r}, expected one of {MARGIN_FORMS}")


def margin_lipschitz(symbol: BaseSymbol, delta: float, form: str = "quadratic"):
    """Lipschitz constant of the margin function, None when the symbol has none"""
    lipschitz = symbol.lipschitz_constant()
    if lipschitz is None:
        return None
    if form == "linear":
        return lipschitz * (1.0 + delta)
    return lipschitz * (1.0 + 2.0 * delta * symbol.coefficient_bound())


def parabolic_margin(symbol: BaseSymbol, delta: float, grid: DiskGrid, form: str = "quadratic") -> MarginReport:
    """
    Minimum over the grid nodes of Re phi - delta (Im phi)^2.

    A nonnegative minimum is evidence only. For symbols with a known
    Lipschitz constant the report is certified when the minimum stays
    nonnegative after subtracting (margin Lipschitz constant) x (covering
    radius of the grid). Ties resolve to the smallest node index.

    Raises:
        ArgumentError: for delta outside (0, 1] or an empty grid
    """
    delta = Validators.require_half_open_interval(delta, 0.0, 1.0, "delta")
    if grid.node_count == 0:
        raise ArgumentError("grid has no nodes")
    margins = margin_values(symbol.evaluate_array(grid.nodes), delta, form)
    index = int(np.argmin(margins))
    minimum = float(margins[index])

    lipschitz = margin_lipschitz(symbol, delta, form)
    slack = lipschitz * grid.covering_radius if lipschitz is not None else None
    certified = slack is not None and minimum - slack >= 0.0
    geometry_logger.debug(
        f"Parabolische Marge ({form}, delta={delta}): min={minimum:.6g} bei Knoten {index}, "
        f"slack={slack}, zertifiziert={certified}"
    )
    return MarginReport(
        min_margin=minimum,
        argmin=complex(grid.nodes[index]),
        argmin_index=index,
        delta=delta,
        form=form,
        grid=grid.descriptor(),
        lipschitz=lipschitz,
        slack=slack,
        certified=certified,
    )


def scaling_constant(symbol: BaseSymbol, resolution: int = AppSettings.DEFAULT_NORM_RESOLUTION) -> float:
    """R = min(1, 1 / upper) / 2 from the certified upper sup-norm bracket; 1/2 for the zero symbol"""
    upper = sup_norm(symbol, resolution).upper
    if upper <= 0.0:
        return 0.5
    return min(1.0, 1.0 / upper) / 2.0


def disc_condition(symbol: BaseSymbol, grid: DiskGrid) -> float:
    """max over grid nodes of |1 - phi|"""
    if grid.node_count == 0:
        raise ArgumentError("grid has no nodes")
    return float(np.max(np.abs(1.0 - symbol.evaluate_array(grid.nodes))))


def boundary_extremum(symbol: BaseSymbol, angles: int = 100000, part: str = "re", kind: str = "min") -> BoundaryExtremum:
    """Extremum of Re phi, Im phi or |phi| over equally spaced points of the unit circle"""
    if part not in BOUNDARY_PARTS:
        raise ArgumentError(f"unknown part {part!r}, expected one of {sorted(BOUNDARY_PARTS)}")
    if kind not in ("min", "max"):
        raise ArgumentError(f"kind must be 'min' or 'max', got {kind!r}")
    angles = Validators.require_positive_int(angles, "angles")
    theta = 2.0 * np.pi * np.arange(angles) / angles
    points = np.exp(1j * theta)
    values = BOUNDARY_PARTS[part](symbol.evaluate_array(points))
    index = int(np.argmin(values) if kind == "min" else np.argmax(values))
    return BoundaryExtremum(
        value=float(values[index]),
        angle=float(theta[index]),
        point=complex(points[index]),
        part=part,
        kind=kind,
        angles=angles,
    )


def superlevel_set(symbol: BaseSymbol, level: float) -> Callable[[np.ndarray], np.ndarray]:
    """Membership predicate of {z : |phi(z)| > level}"""
    def member(points: np.ndarray) -> np.ndarray:
        return np.abs(symbol.evaluate_array(points)) > level
    return member
