import math
from typing import List, Optional

import numpy as np

from .conditions import margin_values
from ..config import AppSettings
from ..core import geometry_logger
from ..core.exceptions import ArgumentError, DomainError
from ..models.grid import DiskGrid
from ..models.reports import SufficiencyVerdict
from ..symbols.base import BaseSymbol
from ..symbols.norms import sup_norm
from ..utils.validators import Validators

VARIANTS = {
    # Variante: (Randbedingung, Exponent der Flächenschranke)
    "quadratic": ("quadratic", 6),
    "linear": ("linear", 4),
}


def rho_zero(symbol: BaseSymbol, resolution: int = AppSettings.DEFAULT_NORM_RESOLUTION) -> float:
    """min(1, 1 / upper) / 32 from the certified sup-norm bracket"""
    upper = sup_norm(symbol, resolution).upper
    return (1.0 if upper <= 1.0 else 1.0 / upper) / 32.0


def _lambda_area(symbol: BaseSymbol, rho: float, grid: DiskGrid):
    """
    Over- and under-count of the area of {|phi| <= rho} over polar cells.

    A cell counts toward the upper estimate when some corner has
    |phi| <= rho + L * diam, toward the lower estimate when every corner has
    |phi| <= rho - L * diam. Without a Lipschitz constant the corners alone
    decide (no certification).
    """
    corners, areas, diameters = grid.polar_cells()
    magnitudes = np.abs(symbol.evaluate_array(corners))
    lipschitz = symbol.lipschitz_constant()
    slack = lipschitz * diameters if lipschitz is not None else np.zeros_like(diameters)
    touching = np.min(magnitudes, axis=1) <= rho + slack
    inside = np.max(magnitudes, axis=1) <= rho - slack
    return float(np.sum(areas[touching])), float(np.sum(areas[inside])), lipschitz is not None


def thm_sufficient_check(symbol: BaseSymbol, rho: float, grid: DiskGrid, variant: str = "quadratic",
                         resolution: int = AppSettings.DEFAULT_NORM_RESOLUTION) -> SufficiencyVerdict:
    """
    Sufficient invertibility condition with small exceptional set:

      (i)   Re phi >= (Im phi)^2 at nodes with |phi| >= rho
            (Re phi >= |Im phi| in the linear variant),
      (ii)  |phi| > rho at nodes with |z| >= rho,
      (iii) |{|phi| <= rho}| <= rho^6 (rho^4 in the linear variant),
            checked with a conservative cell over-count using Euclidean
            cell areas,

    and the verdict passes only when additionally rho < rho0.

    Raises:
        DomainError: for rho <= 0
    """
    rho = Validators.require_finite_real(rho, "rho")
    if rho <= 0.0:
        raise DomainError(f"rho must be positive, got {rho}")
    if variant not in VARIANTS:
        raise ArgumentError(f"unknown variant {variant!r}, expected one of {sorted(VARIANTS)}")
    form, power = VARIANTS[variant]
    rho0 = rho_zero(symbol, resolution)
    reasons: List[str] = []

    nodes = grid.nodes
    values = symbol.evaluate_array(nodes)
    magnitudes = np.abs(values)

    # (i)
    selected = magnitudes >= rho
    margin_i: Optional[float] = None
    if np.any(selected):
        margin_i = float(np.min(margin_values(values[selected], 1.0, form)))
    pass_i = margin_i is None or margin_i >= 0.0
    if not pass_i:
        reasons.append(f"condition (i) fails: parabolic margin {margin_i:.6g} < 0")

    # (ii)
    outer = np.abs(nodes) >= rho
    margin_ii: Optional[float] = None
    if np.any(outer):
        margin_ii = float(np.min(magnitudes[outer]) - rho)
    pass_ii = margin_ii is None or margin_ii > 0.0
    if not pass_ii:
        reasons.append(f"condition (ii) fails: |phi| - rho = {margin_ii:.6g} on |z| >= rho")

    # (iii)
    area_upper, area_lower, certified = _lambda_area(symbol, rho, grid)
    area_bound = rho ** power
    pass_iii = area_upper <= area_bound
    if not pass_iii:
        reasons.append(f"condition (iii) fails: area over-count {area_upper:.6g} > rho^{power} = {area_bound:.6g}")

    if not rho < rho0:
        reasons.append("rho exceeds rho0")

    verdict = SufficiencyVerdict(
        rho=rho,
        rho0=rho0,
        variant=variant,
        pass_i=pass_i,
        margin_i=margin_i,
        pass_ii=pass_ii,
        margin_ii=margin_ii,
        pass_iii=pass_iii,
        lambda_area_upper=area_upper,
        lambda_area_lower=area_lower,
        area_bound=area_bound,
        certified=certified,
        reasons=tuple(reasons),
    )
    geometry_logger.info(f"Hinreichende Bedingung rho={rho:.4g}, rho0={rho0:.4g}: passed={verdict.passed}")
    return verdict


def corollary_check(symbol: BaseSymbol, grid: DiskGrid,
                    resolution: int = AppSettings.DEFAULT_NORM_RESOLUTION) -> SufficiencyVerdict:
    """
    Special case delta <= |phi| <= ||phi||_inf together with the parabolic
    condition: run the sufficiency check at rho = min(delta, rho0) / 2,
    where delta is the certified lower bound of |phi| over the grid (the
    node minimum minus Lipschitz constant times covering radius).
    """
    magnitudes = np.abs(symbol.evaluate_array(grid.nodes))
    lipschitz = symbol.lipschitz_constant() or 0.0
    delta = float(np.min(magnitudes)) - lipschitz * grid.covering_radius
    rho0 = rho_zero(symbol, resolution)
    if delta <= 0.0:
        geometry_logger.info(f"Keine positive untere Schranke für |phi| (delta={delta:.4g})")
        rho = rho0 / 2.0
    else:
        rho = min(delta, rho0) / 2.0
    geometry_logger.debug(f"Korollar: delta={delta:.6g}, rho={rho:.6g}")
    return thm_sufficient_check(symbol, rho, grid, resolution=resolution)


def multiplier_tail_bound(r: float, n: int) -> float:
    """r^(n+1) / sqrt(1 - r): norm of multiplication by the indicator of |w| < r on functions vanishing to order n"""
    r = Validators.require_open_interval(r, 0.0, 1.0, "r")
    n = Validators.require_positive_int(n, "n", minimum=0)
    return r ** (n + 1) / math.sqrt(1.0 - r)
