from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

import numpy as np

from .base import BaseSymbol
from ..config import DomainConstants
from ..core import symbols_logger
from ..core.exceptions import ArgumentError, DomainError
from ..models.base import BaseModel
from ..utils.validators import Validators

INTERPOLATION_RULES = ("linear",)


@dataclass(frozen=True, eq=False)
class RadialSymbol(BaseSymbol, BaseModel):
    """
    Real symbol depending on r = |z| only: either a polynomial sum c_k r^k
    or a table (r_i, g_i) with linear interpolation and constant extension
    to the ends of [0, 1].

    Polynomials keep exact rational coefficients when they were given
    exactly; the eigenvalue route then stays in rational arithmetic.
    """
    coefficients: Optional[Tuple[float, ...]] = None
    exact_coefficients: Optional[Tuple[Fraction, ...]] = None
    sample_radii: Optional[np.ndarray] = None
    sample_values: Optional[np.ndarray] = None
    interpolation: str = "linear"

    kind = "radial"

    def __post_init__(self):
        if (self.coefficients is None) == (self.sample_radii is None):
            raise ArgumentError("radial symbol needs either coefficients or samples")
        if self.coefficients is not None:
            coefficients = tuple(float(c) for c in self.coefficients)
            if not coefficients:
                raise ArgumentError("radial polynomial needs at least one coefficient")
            if not all(np.isfinite(coefficients)):
                raise ArgumentError("radial coefficients must be finite")
            object.__setattr__(self, "coefficients", coefficients)
            if self.exact_coefficients is not None:
                object.__setattr__(self, "exact_coefficients", tuple(Fraction(c) for c in self.exact_coefficients))
            return
        radii = np.asarray(self.sample_radii, dtype=float)
        values = np.asarray(self.sample_values, dtype=float)
        if radii.ndim != 1 or radii.size == 0 or radii.shape != values.shape:
            raise ArgumentError("samples need matching, non-empty radius and value lists")
        if radii[0] < 0.0 or radii[-1] > 1.0 or np.any(np.diff(radii) <= 0.0):
            raise ArgumentError("sample radii must be strictly increasing in [0, 1]")
        if not np.all(np.isfinite(values)):
            raise ArgumentError("sample values must be finite")
        if self.interpolation not in INTERPOLATION_RULES:
            raise ArgumentError(f"unknown interpolation rule {self.interpolation!r}")
        radii.flags.writeable = False
        values.flags.writeable = False
        object.__setattr__(self, "sample_radii", radii)
        object.__setattr__(self, "sample_values", values)

    @classmethod
    def polynomial(cls, coefficients: Sequence) -> "RadialSymbol":
        """c_0 + c_1 r + ... from numbers or rational strings; exact when every entry is rational"""
        exact = tuple(Validators.parse_rational(c, f"coeffs[{k}]") for k, c in enumerate(coefficients))
        return cls(coefficients=tuple(float(c) for c in exact), exact_coefficients=exact)

    @classmethod
    def sampled(cls, radii: Sequence[float], values: Sequence[float], interpolation: str = "linear") -> "RadialSymbol":
        return cls(sample_radii=np.asarray(radii), sample_values=np.asarray(values), interpolation=interpolation)

    @property
    def is_polynomial(self) -> bool:
        return self.coefficients is not None

    @property
    def is_exact(self) -> bool:
        return self.exact_coefficients is not None

    @property
    def is_radial(self) -> bool:
        return True

    @property
    def is_real_valued(self) -> bool:
        return True

    @property
    def degree(self) -> int:
        if not self.is_polynomial:
            return 0
        nonzero = [k for k, c in enumerate(self.coefficients) if c != 0.0]
        return nonzero[-1] if nonzero else 0

    @property
    def prefers_r_rule(self) -> bool:
        if not self.is_polynomial:
            return True
        return any(c != 0.0 for c in self.coefficients[1::2])

    def polynomial_degree(self) -> int:
        return self.degree if self.is_polynomial else 2

    def evaluate_radius(self, r: float) -> float:
        """eval_radial: g(r) for 0 <= r <= 1"""
        r = Validators.require_finite_real(r, "r")
        if r < 0.0 or r > 1.0 + DomainConstants.CLOSED_DISC_SLACK:
            raise DomainError(f"radius must lie in [0, 1], got {r}")
        return float(self.evaluate_radius_array(np.array([min(r, 1.0)]))[0])

    def evaluate_radius_array(self, radii: np.ndarray) -> np.ndarray:
        radii = np.asarray(radii, dtype=float)
        if self.is_polynomial:
            return np.polynomial.polynomial.polyval(radii, self.coefficients)
        return np.interp(radii, self.sample_radii, self.sample_values)

    def evaluate_array(self, points: np.ndarray) -> np.ndarray:
        return self.evaluate_radius_array(np.abs(points)).astype(complex)

    def _knots(self) -> Tuple[np.ndarray, np.ndarray]:
        """Sample table extended by constant pieces to cover [0, 1]"""
        radii, values = self.sample_radii, self.sample_values
        if radii[0] > 0.0:
            radii, values = np.concatenate(([0.0], radii)), np.concatenate(([values[0]], values))
        if radii[-1] < 1.0:
            radii, values = np.concatenate((radii, [1.0])), np.concatenate((values, [values[-1]]))
        return radii, values

    def lipschitz_constant(self) -> Optional[float]:
        if self.is_polynomial:
            return float(self.degree * sum(abs(c) for c in self.coefficients))
        radii, values = self._knots()
        if radii.size < 2:
            return 0.0
        return float(np.max(np.abs(np.diff(values) / np.diff(radii))))

    def coefficient_bound(self) -> float:
        if self.is_polynomial:
            return float(sum(abs(c) for c in self.coefficients))
        return float(np.max(np.abs(self.sample_values)))

    def moments(self, count: int) -> np.ndarray:
        """
        mu_n = 2 int_0^1 g(r) r^(2n+1) dr for n < count, in floating point.
        Samples are integrated exactly piece by piece.
        """
        n = np.arange(count, dtype=float)[:, None]
        if self.is_polynomial:
            k = np.arange(len(self.coefficients), dtype=float)[None, :]
            return (2.0 * np.asarray(self.coefficients)[None, :] / (k + 2.0 * n + 2.0)).sum(axis=1)
        radii, values = self._knots()
        a, b = radii[:-1][None, :], radii[1:][None, :]
        slope = np.diff(values) / np.diff(radii)
        intercept = values[:-1] - slope * radii[:-1]
        p = 2.0 * n + 2.0
        pieces = intercept[None, :] * (b ** p - a ** p) / p + slope[None, :] * (b ** (p + 1) - a ** (p + 1)) / (p + 1)
        return 2.0 * pieces.sum(axis=1)

    def exact_moment(self, n: int) -> Optional[Fraction]:
        if not self.is_exact:
            return None
        return sum((2 * c / (k + 2 * n + 2) for k, c in enumerate(self.exact_coefficients)), Fraction(0))

    def scaled(self, factor) -> "RadialSymbol":
        factor = _real_factor(factor)
        return self._mapped(lambda c: c * factor, scale_all=True, factor=factor)

    def shifted(self, constant) -> "RadialSymbol":
        constant = _real_factor(constant)
        return self._mapped(lambda c: c + constant, scale_all=False, factor=constant)

    def _mapped(self, operation, scale_all: bool, factor) -> "RadialSymbol":
        exact_factor = isinstance(factor, (int, Fraction)) and not isinstance(factor, bool)
        if self.is_polynomial:
            coefficients = list(self.coefficients)
            exact = list(self.exact_coefficients) if self.is_exact and exact_factor else None
            indices = range(len(coefficients)) if scale_all else [0]
            for k in indices:
                coefficients[k] = operation(coefficients[k])
                if exact is not None:
                    exact[k] = operation(exact[k])
            symbols_logger.debug(f"Radialsymbol transformiert (exakt: {exact is not None})")
            return RadialSymbol(
                coefficients=tuple(float(c) for c in coefficients),
                exact_coefficients=tuple(exact) if exact is not None else None,
            )
        return RadialSymbol(
            sample_radii=self.sample_radii,
            sample_values=operation(np.array(self.sample_values, dtype=float)),
            interpolation=self.interpolation,
        )

    def describe(self) -> str:
        if self.is_polynomial:
            terms = [f"{c:g}*r^{k}" for k, c in enumerate(self.coefficients) if c != 0.0]
            return "radial: " + (" + ".join(terms) if terms else "0")
        return f"radial samples ({self.sample_radii.size} radii, {self.interpolation})"


def _real_factor(value):
    if isinstance(value, (complex, np.complexfloating)):
        if value.imag != 0.0:
            raise ArgumentError("radial symbols are real; complex factors are not supported")
        return float(value.real)
    return value


def eval_radial(symbol: RadialSymbol, r: float) -> float:
    return symbol.evaluate_radius(r)
