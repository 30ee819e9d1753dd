from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .base import BaseModel


@dataclass(frozen=True)
class SupNormBracket(BaseModel):
    """lower <= sup|phi| <= upper"""
    lower: float
    upper: float
    resolution: int
    lipschitz: Optional[float] = None
    argmax: Optional[complex] = None
    certified: bool = True

    def __iter__(self):
        yield self.lower
        yield self.upper


@dataclass(frozen=True)
class MarginReport(BaseModel):
    min_margin: float
    argmin: complex
    argmin_index: int
    delta: float
    form: str
    grid: dict
    lipschitz: Optional[float] = None
    slack: Optional[float] = None
    certified: bool = False

    @property
    def evidence(self) -> bool:
        return self.min_margin >= 0.0


@dataclass(frozen=True)
class EuclideanDisc(BaseModel):
    center: complex
    radius: float

    @property
    def normalized_area(self) -> float:
        return self.radius ** 2

    def contains(self, points):
        return abs(points - self.center) < self.radius


@dataclass(frozen=True)
class AreaEstimate(BaseModel):
    """Monte-Carlo estimate of a normalized area next to its closed form"""
    estimate: float
    std_error: float
    closed_form: float
    samples: int
    seed: Optional[int]


@dataclass(frozen=True)
class DensityReport(BaseModel):
    min_ratio: float
    argmin: complex
    std_error: float
    epsilon: float
    samples_per_disc: int
    probes: int
    seed: Optional[int]


@dataclass(frozen=True)
class BoundaryExtremum(BaseModel):
    value: float
    angle: float
    point: complex
    part: str
    kind: str
    angles: int


@dataclass(frozen=True)
class SufficiencyVerdict(BaseModel):
    rho: float
    rho0: float
    variant: str
    pass_i: bool
    margin_i: Optional[float]
    pass_ii: bool
    margin_ii: Optional[float]
    pass_iii: bool
    lambda_area_upper: float
    lambda_area_lower: float
    area_bound: float
    certified: bool
    reasons: Tuple[str, ...] = ()

    @property
    def lambda_area_error(self) -> float:
        """One-sided: the true area lies in [upper - error, upper]"""
        return self.lambda_area_upper - self.lambda_area_lower

    @property
    def passed(self) -> bool:
        return self.pass_i and self.pass_ii and self.pass_iii and self.rho < self.rho0

    def to_dict(self):
        data = super().to_dict()
        data["lambda_area_error"] = self.lambda_area_error
        data["passed"] = self.passed
        return data


@dataclass(frozen=True)
class Theorem33FormReport(BaseModel):
    p0_real: bool
    p0_at_least_one: bool
    coefficients_nonzero: bool
    modulus_sum: float
    modulus_sum_is_one: bool
    exact: bool
    branch: Optional[str] = None
    modulus_sum_exact: Optional[Fraction] = None
    failures: Tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return self.p0_real and self.p0_at_least_one and self.coefficients_nonzero and self.modulus_sum_is_one

    def to_dict(self):
        data = super().to_dict()
        data["passed"] = self.passed
        return data


@dataclass(frozen=True)
class BerezinLowerBound(BaseModel):
    """inf of B(|phi|) over a probe grid; a numerical estimate, not a certified bound"""
    infimum: float
    argmin: complex
    probes: int
    est_error: float
    label: str = "estimate"
