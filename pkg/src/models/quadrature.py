from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional, Tuple

import numpy as np

from .base import BaseModel
from ..config import AppSettings, QuadratureConstants
from ..core.exceptions import ArgumentError


@dataclass(frozen=True)
class QuadratureSpec(BaseModel):
    """
    Tensor rule for disc integrals: Gauss-Legendre in t = r**2 (or in r)
    times uniform angles, with a target absolute tolerance.

    With ``adaptive`` the order is doubled until two successive orders agree
    within tolerance / 2; ``strict`` turns non-convergence into an error.
    """
    radial_order: int = QuadratureConstants.MIN_RADIAL_ORDER
    angular_count: int = QuadratureConstants.MIN_ANGULAR_COUNT
    tolerance: float = AppSettings.DEFAULT_QUADRATURE_TOLERANCE
    radial_variable: str = "t"
    adaptive: bool = True
    strict: bool = True

    def __post_init__(self):
        if self.radial_order < 1 or self.angular_count < 1:
            raise ArgumentError("quadrature orders must be positive")
        if not self.tolerance > 0.0:
            raise ArgumentError(f"quadrature tolerance must be positive, got {self.tolerance}")
        if self.radial_variable not in ("t", "r"):
            raise ArgumentError(f"radial variable must be 't' or 'r', got {self.radial_variable!r}")

    def exact_for(self, trig_degree: int) -> bool:
        """True when the angular rule integrates trigonometric degree ``trig_degree`` exactly"""
        return self.angular_count >= 2 * trig_degree + 1

    def doubled(self) -> "QuadratureSpec":
        return replace(self, radial_order=2 * self.radial_order, angular_count=2 * self.angular_count)

    def with_variable(self, radial_variable: str) -> "QuadratureSpec":
        return replace(self, radial_variable=radial_variable)


@dataclass(frozen=True, eq=False)
class RadialMoments(BaseModel):
    """mu_n = 2 * int_0^1 g(r) r^(2n+1) dr for n = 0..count-1"""
    values: np.ndarray
    sup_bound: float
    exact: Optional[Tuple[Fraction, ...]] = None

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        values.flags.writeable = False
        object.__setattr__(self, "values", values)

    @property
    def count(self) -> int:
        return int(self.values.size)


@dataclass(frozen=True)
class BerezinValue(BaseModel):
    """A Berezin transform value with its error estimate and the route that produced it"""
    z: complex
    value: complex
    est_error: float
    route: str
    detail: Optional[dict] = None
