import math
from typing import Callable, Optional

import numpy as np

from ..config import AppSettings
from ..core import geometry_logger
from ..core.exceptions import ArgumentError
from ..models.grid import DiskGrid
from ..models.reports import AreaEstimate, DensityReport, EuclideanDisc
from ..utils.validators import Validators

MIN_SAMPLES_PER_DISC = 100

Membership = Callable[[np.ndarray], np.ndarray]


def pseudohyperbolic_distance(z, w) -> float:
    """|z - w| / |1 - conj(w) z| for points of the open disc"""
    z = Validators.require_open_disc(z, "z")
    w = Validators.require_open_disc(w, "w")
    return abs(z - w) / abs(1.0 - w.conjugate() * z)


def pseudohyperbolic_disc(w, epsilon: float) -> EuclideanDisc:
    """
    Euclidean center and radius of {z : |z - w| / |1 - conj(w) z| < epsilon}.

    Raises:
        DomainError: for |w| >= 1 or epsilon outside (0, 1)
    """
    w = Validators.require_open_disc(w, "w")
    epsilon = Validators.require_open_interval(epsilon, 0.0, 1.0, "epsilon")
    eps2 = epsilon * epsilon
    denominator = 1.0 - eps2 * abs(w) ** 2
    return EuclideanDisc(
        center=(1.0 - eps2) * w / denominator,
        radius=epsilon * (1.0 - abs(w) ** 2) / denominator,
    )


def _uniform_in_disc(rng: np.random.Generator, count: int, center: complex = 0j, radius: float = 1.0) -> np.ndarray:
    # Wurzel des Radius ergibt Gleichverteilung bezüglich der Fläche
    rho = radius * np.sqrt(rng.random(count))
    theta = 2.0 * np.pi * rng.random(count)
    return center + rho * np.exp(1j * theta)


def _generator(seed: Optional[int], randomize: bool) -> np.random.Generator:
    return np.random.default_rng(None if randomize else seed)


def estimate_normalized_area(w, epsilon: float, samples: int = 200000,
                             seed: Optional[int] = AppSettings.DEFAULT_SEED,
                             randomize: bool = False) -> AreaEstimate:
    """
    Monte-Carlo area of D(w, epsilon) by membership counting in the unit
    disc (normalized area of the unit disc is 1), next to the closed form
    radius^2.
    """
    disc = pseudohyperbolic_disc(w, epsilon)
    samples = Validators.require_positive_int(samples, "samples")
    rng = _generator(seed, randomize)
    points = _uniform_in_disc(rng, samples)
    w = complex(w)
    inside = np.abs(points - w) < epsilon * np.abs(1.0 - np.conj(w) * points)
    fraction = float(np.mean(inside))
    std_error = math.sqrt(max(fraction * (1.0 - fraction), 0.0) / samples)
    return AreaEstimate(
        estimate=fraction,
        std_error=std_error,
        closed_form=disc.normalized_area,
        samples=samples,
        seed=None if randomize else seed,
    )


def luecking_density(member: Membership, epsilon: float, probe_grid: DiskGrid,
                     samples_per_disc: int = 1000, seed: Optional[int] = AppSettings.DEFAULT_SEED,
                     randomize: bool = False) -> DensityReport:
    """
    min over probe points w of |G n D(w, eps)| / |D(w, eps)|, estimated by
    uniform sampling in each pseudohyperbolic disc. The standard error is
    the binomial one at the minimizing probe.

    Raises:
        ArgumentError: if fewer than 100 samples per disc are requested
    """
    if samples_per_disc < MIN_SAMPLES_PER_DISC:
        raise ArgumentError(f"samples per disc must be at least {MIN_SAMPLES_PER_DISC}, got {samples_per_disc}")
    probes = probe_grid.nodes[np.abs(probe_grid.nodes) < 1.0]
    if probes.size == 0:
        raise ArgumentError("probe grid has no interior nodes")
    Validators.require_open_interval(epsilon, 0.0, 1.0, "epsilon")
    rng = _generator(seed, randomize)

    ratios = np.empty(probes.size)
    for index, w in enumerate(probes):
        disc = pseudohyperbolic_disc(complex(w), epsilon)
        points = _uniform_in_disc(rng, samples_per_disc, disc.center, disc.radius)
        ratios[index] = float(np.mean(member(points)))

    index = int(np.argmin(ratios))
    ratio = float(ratios[index])
    std_error = math.sqrt(max(ratio * (1.0 - ratio), 0.0) / samples_per_disc)
    geometry_logger.debug(
        f"Dichte-Diagnose: min_ratio={ratio:.4f} bei w={complex(probes[index])}, {probes.size} Proben"
    )
    return DensityReport(
        min_ratio=ratio,
        argmin=complex(probes[index]),
        std_error=std_error,
        epsilon=float(epsilon),
        samples_per_disc=samples_per_disc,
        probes=int(probes.size),
        seed=None if randomize else seed,
    )


def whole_disc(points: np.ndarray) -> np.ndarray:
    return np.ones(np.shape(points), dtype=bool)


def empty_set(points: np.ndarray) -> np.ndarray:
    return np.zeros(np.shape(points), dtype=bool)
