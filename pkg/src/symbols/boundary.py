from dataclasses import dataclass
from typing import Dict, Tuple

import numpy as np

from .coefficients import Coefficient
from .harmonic import HarmonicPolynomial, MonomialTerm
from ..core.exceptions import ArgumentError
from ..models.base import BaseModel


@dataclass(frozen=True)
class TrigPolynomial(BaseModel):
    """Boundary data sum_n a_n e^{int}, n in Z, stored as sorted (n, a_n) pairs with a_n != 0"""
    terms: Tuple[Tuple[int, complex], ...]

    def __post_init__(self):
        merged: Dict[int, complex] = {}
        for frequency, coefficient in self.terms:
            merged[int(frequency)] = merged.get(int(frequency), 0j) + complex(coefficient)
        terms = tuple(sorted((n, a) for n, a in merged.items() if a != 0))
        if not all(np.isfinite(a) for _, a in terms):
            raise ArgumentError("trigonometric coefficients must be finite")
        object.__setattr__(self, "terms", terms)

    @classmethod
    def from_harmonic(cls, polynomial: HarmonicPolynomial) -> "TrigPolynomial":
        """Restriction to the unit circle: z^m -> e^{imt}, conj(z)^n -> e^{-int}"""
        terms = [(0, polynomial.p0.value)]
        terms += [(t.exponent, t.coefficient.value) for t in polynomial.analytic]
        terms += [(-t.exponent, t.coefficient.value) for t in polynomial.coanalytic]
        return cls(tuple(terms))

    @classmethod
    def constant(cls, value: complex) -> "TrigPolynomial":
        return cls(((0, complex(value)),))

    def to_harmonic(self) -> HarmonicPolynomial:
        """The Poisson extension, itself a harmonic polynomial"""
        coefficients = dict(self.terms)
        return HarmonicPolynomial(
            Coefficient(coefficients.get(0, 0j)),
            tuple(MonomialTerm(n, Coefficient(a)) for n, a in self.terms if n > 0),
            tuple(MonomialTerm(-n, Coefficient(a)) for n, a in sorted(self.terms, key=lambda t: -t[0]) if n < 0),
        )

    @property
    def min_frequency(self) -> int:
        return min((n for n, _ in self.terms), default=0)

    @property
    def max_frequency(self) -> int:
        return max((n for n, _ in self.terms), default=0)

    def evaluate(self, t: float) -> complex:
        return complex(self.evaluate_array(np.array([t], dtype=float))[0])

    def evaluate_array(self, angles: np.ndarray) -> np.ndarray:
        angles = np.asarray(angles, dtype=float)
        result = np.zeros(angles.shape, dtype=complex)
        for frequency, coefficient in self.terms:
            result += coefficient * np.exp(1j * frequency * angles)
        return result

    def lipschitz_constant(self) -> float:
        """Lipschitz constant in t, equal to the one along the circle since |d e^{it}| = dt"""
        return float(sum(abs(n) * abs(a) for n, a in self.terms))

    def coefficient_bound(self) -> float:
        return float(sum(abs(a) for _, a in self.terms))

    def laurent_coefficients(self) -> Tuple[int, np.ndarray]:
        """(lowest frequency, dense coefficients from lowest to highest frequency)"""
        low, high = self.min_frequency, self.max_frequency
        dense = np.zeros(high - low + 1, dtype=complex)
        for frequency, coefficient in self.terms:
            dense[frequency - low] = coefficient
        return low, dense

    def to_dict(self):
        return {"terms": [[n, {"re": a.real, "im": a.imag}] for n, a in self.terms]}


@dataclass(frozen=True, eq=False)
class BoundarySamples(BaseModel):
    """Values g(e^{i t_j}) at the uniform angles t_j = 2 pi j / M"""
    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=complex)
        if values.ndim != 1 or values.size < 2:
            raise ArgumentError("boundary samples need at least two values")
        if not np.all(np.isfinite(values)):
            raise ArgumentError("boundary samples must be finite")
        values.flags.writeable = False
        object.__setattr__(self, "values", values)

    @classmethod
    def from_function(cls, function, count: int) -> "BoundarySamples":
        return cls(function(np.exp(2j * np.pi * np.arange(count) / count)))

    @property
    def count(self) -> int:
        return int(self.values.size)

    @property
    def angles(self) -> np.ndarray:
        return 2.0 * np.pi * np.arange(self.count) / self.count

    def evaluate_array(self, angles: np.ndarray) -> np.ndarray:
        """Periodic linear interpolation between the samples"""
        grid = np.append(self.angles, 2.0 * np.pi)
        values = np.append(self.values, self.values[0])
        angles = np.mod(np.asarray(angles, dtype=float), 2.0 * np.pi)
        return np.interp(angles, grid, values.real) + 1j * np.interp(angles, grid, values.imag)

    def evaluate(self, t: float) -> complex:
        return complex(self.evaluate_array(np.array([t]))[0])
