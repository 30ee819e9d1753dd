from dataclasses import dataclass
from functools import cached_property
from typing import Optional

import numpy as np

from .base import BaseModel
from ..config import GridConstants
from ..core.exceptions import ArgumentError


@dataclass(frozen=True, eq=False)
class DiskGrid(BaseModel):
    """
    Polar node set on the closed unit disc.

    ``radii`` holds the interior rings r_1 < ... < r_R in [0, 1); a ring at
    radius 0 carries a single node. When ``boundary_gap`` is set an extra
    ring at 1 - boundary_gap with ``boundary_angles`` nodes is appended.
    """
    radii: np.ndarray
    angle_counts: np.ndarray
    boundary_gap: Optional[float] = None
    boundary_angles: int = 0
    max_angles: Optional[int] = None

    def __post_init__(self):
        radii = np.asarray(self.radii, dtype=float)
        counts = np.asarray(self.angle_counts, dtype=int)
        if radii.ndim != 1 or radii.size == 0:
            raise ArgumentError("grid needs at least one ring")
        if radii.shape != counts.shape:
            raise ArgumentError("one angle count per ring required")
        if radii[0] < 0.0 or radii[-1] >= 1.0 or np.any(np.diff(radii) <= 0.0):
            raise ArgumentError("ring radii must be strictly increasing in [0, 1)")
        if np.any(counts < 1):
            raise ArgumentError("angle counts must be positive")
        if self.boundary_gap is not None:
            if not (0.0 < self.boundary_gap <= GridConstants.MAX_BOUNDARY_GAP):
                raise ArgumentError(
                    f"boundary_gap must lie in (0, {GridConstants.MAX_BOUNDARY_GAP}], got {self.boundary_gap}"
                )
            if 1.0 - self.boundary_gap <= radii[-1]:
                raise ArgumentError("boundary ring must lie outside the interior rings")
            if self.boundary_angles < 1:
                raise ArgumentError("boundary ring needs at least one angle")
        radii.flags.writeable = False
        counts.flags.writeable = False
        object.__setattr__(self, "radii", radii)
        object.__setattr__(self, "angle_counts", counts)

    @classmethod
    def build(cls, rings: int, max_angles: int, boundary_gap: Optional[float] = None) -> "DiskGrid":
        """
        Standard grid: rings at sin(pi k / (2R)), k = 0..R-1, clustered near
        the unit circle, with max(8, ceil(max_angles r_k)) angles per ring.
        """
        if rings < 1:
            raise ArgumentError(f"rings must be positive, got {rings}")
        if max_angles < GridConstants.MIN_ANGLES_PER_RING:
            raise ArgumentError(f"angles must be at least {GridConstants.MIN_ANGLES_PER_RING}, got {max_angles}")
        k = np.arange(rings)
        radii = np.sin(np.pi * k / (2.0 * rings))
        counts = np.maximum(GridConstants.MIN_ANGLES_PER_RING, np.ceil(max_angles * radii)).astype(int)
        counts[0] = 1
        return cls(
            radii=radii,
            angle_counts=counts,
            boundary_gap=boundary_gap,
            boundary_angles=max_angles if boundary_gap is not None else 0,
            max_angles=max_angles,
        )

    @property
    def has_boundary_ring(self) -> bool:
        return self.boundary_gap is not None

    @cached_property
    def ring_radii(self) -> np.ndarray:
        if self.has_boundary_ring:
            return np.append(self.radii, 1.0 - self.boundary_gap)
        return np.array(self.radii)

    @cached_property
    def ring_counts(self) -> np.ndarray:
        counts = np.array(self.angle_counts)
        if self.has_boundary_ring:
            counts = np.append(counts, self.boundary_angles)
        return counts

    @property
    def node_count(self) -> int:
        return int(self.ring_counts.sum())

    @cached_property
    def ring_offsets(self) -> np.ndarray:
        """Index of the first node of every ring (plus the total at the end)"""
        return np.concatenate(([0], np.cumsum(self.ring_counts)))

    @cached_property
    def nodes(self) -> np.ndarray:
        parts = []
        for radius, count in zip(self.ring_radii, self.ring_counts):
            angles = 2.0 * np.pi * np.arange(count) / count
            parts.append(radius * np.exp(1j * angles))
        nodes = np.concatenate(parts)
        nodes.flags.writeable = False
        return nodes

    @cached_property
    def ring_index(self) -> np.ndarray:
        return np.repeat(np.arange(self.ring_radii.size), self.ring_counts)

    @cached_property
    def covering_radius(self) -> float:
        """
        Every point of the closed unit disc lies within this distance of a node:
        half the largest gap between rings (the gap up to radius 1 counted in
        full) plus the largest half arc between neighbouring nodes of a ring.
        """
        radii = self.ring_radii
        radial = float(np.max(np.diff(radii)) / 2.0) if radii.size > 1 else 0.0
        radial = max(radial, float(radii[0]), 1.0 - float(radii[-1]))
        angular = float(np.max(radii * np.pi / self.ring_counts))
        return radial + angular

    def descriptor(self) -> dict:
        return {
            "rings": int(self.radii.size),
            "max_angles": int(self.ring_counts.max()),
            "boundary_gap": self.boundary_gap,
            "nodes": self.node_count,
            "covering_radius": self.covering_radius,
        }

    def to_dict(self):
        return self.descriptor()

    def polar_cells(self):
        """
        Polar cells between consecutive rings and between the last ring and
        the unit circle, using the angular resolution of the outer ring.

        Returns:
            (corners, areas, diameters): corners has shape (cells, 4); areas are
            Euclidean annular-sector areas; diameters bound the distance from
            any cell point to any of its corners.
        """
        radii = np.append(self.ring_radii, 1.0)
        counts = np.append(self.ring_counts, self.ring_counts[-1])
        corners, areas, diameters = [], [], []
        for inner, outer, count in zip(radii[:-1], radii[1:], counts[1:]):
            count = max(int(count), GridConstants.MIN_ANGLES_PER_RING)
            angles = 2.0 * np.pi * np.arange(count + 1) / count
            ring_in = inner * np.exp(1j * angles)
            ring_out = outer * np.exp(1j * angles)
            corners.append(np.stack([ring_in[:-1], ring_in[1:], ring_out[:-1], ring_out[1:]], axis=1))
            sector = 2.0 * np.pi / count
            areas.append(np.full(count, 0.5 * sector * (outer ** 2 - inner ** 2)))
            diameters.append(np.full(count, (outer - inner) + outer * sector))
        return np.concatenate(corners), np.concatenate(areas), np.concatenate(diameters)


@dataclass(frozen=True, eq=False)
class GridField(BaseModel):
    """Complex values attached to the nodes of a DiskGrid"""
    grid: DiskGrid
    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=complex)
        if values.shape != (self.grid.node_count,):
            raise ArgumentError(
                f"field has {values.size} values for {self.grid.node_count} grid nodes"
            )
        values.flags.writeable = False
        object.__setattr__(self, "values", values)

    def to_dict(self):
        return {"grid": self.grid.descriptor(), "values": self.values}
