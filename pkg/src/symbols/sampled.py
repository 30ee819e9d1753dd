from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy.spatial import cKDTree

from .base import BaseSymbol
from ..core.exceptions import ArgumentError
from ..models.base import BaseModel
from ..models.grid import DiskGrid

SAMPLING_RULES = ("nearest", "bilinear")


@dataclass(frozen=True, eq=False)
class SampledSymbol(BaseSymbol, BaseModel):
    """
    Values at the nodes of a DiskGrid, evaluated by the declared rule:
    ``nearest`` node, or ``bilinear`` in polar coordinates (linear along each
    ring, then linear between the two neighbouring rings).
    """
    grid: DiskGrid
    values: np.ndarray
    rule: str = "bilinear"

    kind = "sampled"

    def __post_init__(self):
        values = np.asarray(self.values, dtype=complex)
        if values.shape != (self.grid.node_count,):
            raise ArgumentError(f"{values.size} values given for {self.grid.node_count} grid nodes")
        if not np.all(np.isfinite(values)):
            raise ArgumentError("sampled values must be finite")
        if self.rule not in SAMPLING_RULES:
            raise ArgumentError(f"unknown sampling rule {self.rule!r}, expected one of {SAMPLING_RULES}")
        values.flags.writeable = False
        object.__setattr__(self, "values", values)

    @cached_property
    def _tree(self) -> cKDTree:
        nodes = self.grid.nodes
        return cKDTree(np.column_stack((nodes.real, nodes.imag)))

    def evaluate_array(self, points: np.ndarray) -> np.ndarray:
        points = np.asarray(points, dtype=complex)
        flat = points.ravel()
        if self.rule == "nearest":
            _, index = self._tree.query(np.column_stack((flat.real, flat.imag)))
            return self.values[index].reshape(points.shape)
        return self._bilinear(flat).reshape(points.shape)

    def _ring_value(self, ring: np.ndarray, theta: np.ndarray) -> np.ndarray:
        counts = self.grid.ring_counts[ring]
        offsets = self.grid.ring_offsets[ring]
        position = theta / (2.0 * np.pi) * counts
        base = np.floor(position)
        fraction = position - base
        first = base.astype(int) % counts
        second = (first + 1) % counts
        return (1.0 - fraction) * self.values[offsets + first] + fraction * self.values[offsets + second]

    def _bilinear(self, points: np.ndarray) -> np.ndarray:
        radii = self.grid.ring_radii
        rho = np.abs(points)
        theta = np.mod(np.angle(points), 2.0 * np.pi)
        above = np.searchsorted(radii, rho, side="right")
        lower = np.clip(above - 1, 0, radii.size - 1)
        upper = np.clip(above, 0, radii.size - 1)
        span = radii[upper] - radii[lower]
        safe_span = np.where(span > 0.0, span, 1.0)
        weight = np.clip(np.where(span > 0.0, (rho - radii[lower]) / safe_span, 0.0), 0.0, 1.0)
        return (1.0 - weight) * self._ring_value(lower, theta) + weight * self._ring_value(upper, theta)

    @property
    def is_real_valued(self) -> bool:
        return bool(np.all(self.values.imag == 0.0))

    @property
    def prefers_r_rule(self) -> bool:
        return True

    def coefficient_bound(self) -> float:
        # beide Regeln bilden konvexe Kombinationen der Knotenwerte
        return float(np.max(np.abs(self.values)))

    def trig_degree(self) -> int:
        return int(self.grid.ring_counts.max()) // 2

    def polynomial_degree(self) -> int:
        return 2

    def boundary_values(self) -> np.ndarray:
        """Values on the outermost ring"""
        offsets = self.grid.ring_offsets
        return np.array(self.values[offsets[-2]:offsets[-1]])

    def scaled(self, factor) -> "SampledSymbol":
        return SampledSymbol(self.grid, self.values * complex(factor), self.rule)

    def shifted(self, constant) -> "SampledSymbol":
        return SampledSymbol(self.grid, self.values + complex(constant), self.rule)

    def describe(self) -> str:
        return f"sampled ({self.grid.node_count} nodes, {self.rule})"

    @classmethod
    def from_symbol(cls, symbol: BaseSymbol, grid: DiskGrid, rule: str = "bilinear") -> "SampledSymbol":
        return cls(grid, symbol.evaluate_array(grid.nodes), rule)
