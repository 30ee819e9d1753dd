import time
from typing import Optional

import numpy as np

from .quadrature import DiscQuadrature, kernel_weights
from ..config import DomainConstants
from ..core import berezin_logger
from ..core.exceptions import ArgumentError
from ..models.grid import GridField
from ..models.quadrature import QuadratureSpec
from ..symbols.sampled import SampledSymbol

# Obergrenze für (Zielpunkte x Quadraturknoten) pro Block
BLOCK_ELEMENTS = 2_000_000

DEFAULT_ITERATION_SPEC = QuadratureSpec(radial_order=64, angular_count=512, radial_variable="r", adaptive=False)


def _transform_block(points: np.ndarray, rule: DiscQuadrature, samples: np.ndarray) -> np.ndarray:
    """Normalized weighted averages sum(W f) / sum(W) for a block of target points"""
    weights = kernel_weights(rule.nodes[None, :], points[:, None]) * rule.weights[None, :]
    return (weights @ samples) / weights.sum(axis=1)


def berezin_field(field: GridField, spec: QuadratureSpec = DEFAULT_ITERATION_SPEC, rule: str = "bilinear") -> GridField:
    """
    One Berezin step on a grid field.

    The field is read as a symbol through the interpolation ``rule``; one
    fixed quadrature rule serves every node. Weights are normalized to sum
    to one, so the step is an average: constants stay fixed and pointwise
    convex conditions such as Re f >= delta (Im f)^2 carry over. Nodes with
    |z| above the quadrature limit keep their value.
    """
    symbol = SampledSymbol(field.grid, field.values, rule)
    quadrature = DiscQuadrature.from_spec(spec)
    samples = symbol.evaluate_array(quadrature.nodes)
    nodes = field.grid.nodes
    result = np.array(field.values)
    inside = np.flatnonzero(np.abs(nodes) <= DomainConstants.QUADRATURE_RADIUS_LIMIT)
    block = max(1, BLOCK_ELEMENTS // quadrature.size)
    for begin in range(0, inside.size, block):
        indices = inside[begin:begin + block]
        result[indices] = _transform_block(nodes[indices], quadrature, samples)
    return GridField(field.grid, result)


def iterate_berezin(field: GridField, n: int, spec: Optional[QuadratureSpec] = None) -> GridField:
    """
    B^n f on the grid of ``field``; n = 0 returns the field unchanged.
    """
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 0:
        raise ArgumentError(f"iteration count must be a non-negative integer, got {n!r}")
    spec = spec or DEFAULT_ITERATION_SPEC
    start = time.perf_counter()
    for step in range(int(n)):
        field = berezin_field(field, spec)
        berezin_logger.debug(f"Iteration {step + 1}/{n} abgeschlossen")
    if n:
        berezin_logger.log_timing("iterate_berezin", (time.perf_counter() - start) * 1000.0,
                                  n=n, nodes=field.grid.node_count)
    return field
