import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

import numpy as np

from ..core.exceptions import ArgumentError
from ..models.base import BaseModel
from ..utils.angles import AngleArithmetic
from ..utils.validators import Validators

# Winkel, für die e^{i pi a} exakt darstellbar ist
_EXACT_UNIT_POINTS = {
    Fraction(0): 1 + 0j,
    Fraction(1, 2): 1j,
    Fraction(1): -1 + 0j,
    Fraction(3, 2): -1j,
}


@dataclass(frozen=True)
class PolarCoefficient(BaseModel):
    """modulus * exp(i * pi * arg_over_pi) with exact rational modulus and argument"""
    modulus: Fraction
    arg_over_pi: Fraction

    def __post_init__(self):
        modulus = Validators.parse_rational(self.modulus, "modulus")
        if modulus < 0:
            raise ArgumentError(f"modulus must be nonnegative, got {modulus}")
        arg = AngleArithmetic.reduce_mod2(Validators.parse_rational(self.arg_over_pi, "arg_over_pi"))
        if modulus == 0:
            arg = Fraction(0)
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "arg_over_pi", arg)

    def to_complex(self) -> complex:
        unit = _EXACT_UNIT_POINTS.get(self.arg_over_pi)
        if unit is None:
            unit = cmath.exp(1j * math.pi * float(self.arg_over_pi))
        return float(self.modulus) * unit

    def conjugate(self) -> "PolarCoefficient":
        return PolarCoefficient(self.modulus, -self.arg_over_pi)

    def scaled(self, factor: Fraction) -> "PolarCoefficient":
        return PolarCoefficient(abs(factor) * self.modulus, self.arg_over_pi + (0 if factor >= 0 else 1))


@dataclass(frozen=True)
class Coefficient(BaseModel):
    """
    Float value of a coefficient with an optional exact polar form.

    The polar form exists when the coefficient was given exactly (a rational
    real number or modulus/argument pair); only the exact decision mode
    needs it.
    """
    value: complex
    polar: Optional[PolarCoefficient] = None

    def __post_init__(self):
        object.__setattr__(self, "value", Validators.require_finite_complex(self.value, "coefficient"))

    @classmethod
    def from_polar(cls, polar: PolarCoefficient) -> "Coefficient":
        return cls(polar.to_complex(), polar)

    @classmethod
    def of(cls, value: Union["Coefficient", PolarCoefficient, Fraction, int, float, complex, str]) -> "Coefficient":
        """Coerce numbers, rational strings and polar pairs into a coefficient"""
        if isinstance(value, Coefficient):
            return value
        if isinstance(value, PolarCoefficient):
            return cls.from_polar(value)
        if isinstance(value, (complex, np.complexfloating)):
            value = complex(value)
            if value.imag != 0.0:
                return cls(value)
            value = value.real
        elif isinstance(value, np.floating):
            value = float(value)
        elif isinstance(value, np.integer):
            value = int(value)
        exact = Validators.parse_rational(value, "coefficient")
        return cls(float(exact), PolarCoefficient(abs(exact), Fraction(0) if exact >= 0 else Fraction(1)))

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    @property
    def modulus(self) -> float:
        return float(self.polar.modulus) if self.polar is not None else abs(self.value)

    @property
    def exact_modulus(self) -> Optional[Fraction]:
        return self.polar.modulus if self.polar is not None else None

    @property
    def exact_real(self) -> Optional[Fraction]:
        """The exact value when the coefficient is a known rational real number"""
        if self.polar is None:
            return None
        if self.polar.arg_over_pi == 0:
            return self.polar.modulus
        if self.polar.arg_over_pi == 1:
            return -self.polar.modulus
        return None

    def arg_over_pi(self) -> Union[Fraction, float]:
        if self.polar is not None:
            return self.polar.arg_over_pi
        return AngleArithmetic.arg_over_pi(self.value)

    def conjugate(self) -> "Coefficient":
        return Coefficient(self.value.conjugate(), self.polar.conjugate() if self.polar else None)

    def scaled(self, factor) -> "Coefficient":
        if isinstance(factor, (int, Fraction)) and not isinstance(factor, bool) and self.polar is not None:
            return Coefficient.from_polar(self.polar.scaled(Fraction(factor)))
        return Coefficient(self.value * complex(factor))

    def plus(self, other) -> "Coefficient":
        """Sum with a number; exact when both sides are rational reals"""
        other = Coefficient.of(other)
        if self.exact_real is not None and other.exact_real is not None:
            return Coefficient.of(self.exact_real + other.exact_real)
        return Coefficient(self.value + other.value)
