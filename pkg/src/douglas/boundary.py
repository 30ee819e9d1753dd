from typing import List

import numpy as np

from ..config import DecisionConstants
from ..core import douglas_logger
from ..core.exceptions import ArgumentError
from ..symbols.boundary import TrigPolynomial

# Winkel, die näher beieinander liegen, gelten als dieselbe Nullstelle
MERGE_DISTANCE = 1e-6


def boundary_zeros(
    data: TrigPolynomial,
    radius_tolerance: float = DecisionConstants.ROOT_RADIUS_TOLERANCE,
    value_tolerance: float = DecisionConstants.WITNESS_TOLERANCE,
) -> List[float]:
    """
    Angles t in [0, 2 pi) with g(e^{it}) = 0 for a trigonometric polynomial g.

    zeta^(-low) g(zeta) is an ordinary polynomial; its companion-matrix roots
    within ``radius_tolerance`` of the unit circle are projected onto it and
    kept when |g| < ``value_tolerance`` there. Every returned angle is a
    checked witness, although a zero missed by the root finder is possible.
    """
    if not data.terms:
        raise ArgumentError("the zero function has no isolated boundary zeros")
    low, dense = data.laurent_coefficients()
    if dense.size == 1:
        return []
    roots = np.roots(dense[::-1])
    near = roots[np.abs(np.abs(roots) - 1.0) <= radius_tolerance]
    angles = np.sort(np.mod(np.angle(near), 2.0 * np.pi))
    values = np.abs(data.evaluate_array(angles)) if angles.size else np.array([])
    zeros: List[float] = []
    for angle, value in zip(angles, values):
        if value >= value_tolerance:
            douglas_logger.debug(f"Wurzel bei t={angle:.12g} verworfen: |g|={value:.3e}")
            continue
        if zeros and angle - zeros[-1] < MERGE_DISTANCE:
            continue
        zeros.append(float(angle))
    # Nullstellen knapp unter 2 pi und bei 0 zusammenfassen
    if len(zeros) > 1 and zeros[0] + 2.0 * np.pi - zeros[-1] < MERGE_DISTANCE:
        zeros.pop()
    douglas_logger.debug(f"{len(zeros)} Randnullstellen gefunden (Grad {dense.size - 1})")
    return zeros
