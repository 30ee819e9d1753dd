from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, Optional, Tuple

from .base import BaseModel


class Outcome(str, Enum):
    INVERTIBLE = "Invertible"
    NOT_INVERTIBLE = "NotInvertible"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class Witness(BaseModel):
    """
    Boundary zero lambda of a symbol together with the integers solving the
    angle system (k for analytic exponents, l for coanalytic exponents).
    """
    angle: float
    lambda_over_pi: Optional[Fraction] = None
    k: Dict[int, int] = field(default_factory=dict)
    l: Dict[int, int] = field(default_factory=dict)
    residual: float = 0.0
    exact_zero: bool = False


@dataclass(frozen=True)
class Verdict(BaseModel):
    outcome: Outcome
    basis: str
    mode: str
    witness: Optional[Witness] = None
    margin: Optional[float] = None
    node: Optional[complex] = None
    certified: bool = False
    candidates: Tuple[dict, ...] = ()
    notes: Tuple[str, ...] = ()

    @property
    def invertible(self) -> bool:
        return self.outcome is Outcome.INVERTIBLE
