from abc import ABC, abstractmethod
from typing import Optional

import numpy as np

from ..utils.validators import Validators


class BaseSymbol(ABC):
    """
    Common interface of all symbol classes.

    ``evaluate`` checks its argument against the closed unit disc;
    ``evaluate_array`` is the vectorized hot path and trusts its caller.
    """

    kind = "symbol"

    def evaluate(self, z) -> complex:
        z = Validators.require_closed_disc(z)
        return complex(self.evaluate_array(np.array([z], dtype=complex))[0])

    @abstractmethod
    def evaluate_array(self, points: np.ndarray) -> np.ndarray:
        ...

    @abstractmethod
    def describe(self) -> str:
        ...

    @property
    def is_polynomial(self) -> bool:
        return False

    @property
    def is_radial(self) -> bool:
        return False

    @property
    def is_real_valued(self) -> bool:
        return False

    @property
    def prefers_r_rule(self) -> bool:
        """Quadrature in r (instead of t = r**2) for integrands with odd powers of |w|"""
        return False

    def lipschitz_constant(self) -> Optional[float]:
        """Certified Lipschitz constant on the closed disc, None if unknown"""
        return None

    def coefficient_bound(self) -> Optional[float]:
        """Cheap certified upper bound for sup |phi|, None if unknown"""
        return None

    def trig_degree(self) -> int:
        """Largest angular frequency of the symbol (heuristic for non-polynomials)"""
        return 0

    def polynomial_degree(self) -> int:
        """Total degree in |w| used to size radial quadrature"""
        return 0

    def __str__(self):
        return self.describe()
