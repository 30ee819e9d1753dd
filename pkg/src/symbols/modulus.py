from dataclasses import dataclass
from typing import Optional

import numpy as np

from .base import BaseSymbol
from ..models.base import BaseModel


@dataclass(frozen=True, eq=False)
class ModulusSymbol(BaseSymbol, BaseModel):
    """|phi| evaluated pointwise; no smoothing at zeros of phi"""
    inner: BaseSymbol

    kind = "modulus"

    def evaluate_array(self, points: np.ndarray) -> np.ndarray:
        return np.abs(self.inner.evaluate_array(points)).astype(complex)

    @property
    def is_radial(self) -> bool:
        return self.inner.is_radial

    @property
    def is_real_valued(self) -> bool:
        return True

    @property
    def prefers_r_rule(self) -> bool:
        return self.inner.prefers_r_rule

    def lipschitz_constant(self) -> Optional[float]:
        # | |a| - |b| | <= |a - b|
        return self.inner.lipschitz_constant()

    def coefficient_bound(self) -> Optional[float]:
        return self.inner.coefficient_bound()

    def trig_degree(self) -> int:
        return self.inner.trig_degree()

    def polynomial_degree(self) -> int:
        return self.inner.polynomial_degree()

    def describe(self) -> str:
        return f"|{self.inner.describe()}|"


def modulus_of(symbol: BaseSymbol) -> ModulusSymbol:
    if isinstance(symbol, ModulusSymbol):
        return symbol
    return ModulusSymbol(symbol)
