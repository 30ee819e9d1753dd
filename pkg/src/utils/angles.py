import math
from fractions import Fraction
from typing import Union

from ..core.exceptions import ArgumentError

Angle = Union[Fraction, float]


# Winkelarithmetik in Vielfachen von pi
class AngleArithmetic:
    """
    Arithmetic on angles expressed as multiples of pi.

    Fractions stay exact (used by the exact decision mode), floats are
    reduced with the usual rounding; both representations live in [0, 2).
    """

    @staticmethod
    def reduce_mod2(value: Angle) -> Angle:
        if isinstance(value, Fraction):
            return value - 2 * (value // 2)
        value = float(value)
        if not math.isfinite(value):
            raise ArgumentError(f"angle must be finite, got {value}")
        reduced = math.fmod(value, 2.0)
        if reduced < 0.0:
            reduced += 2.0
        # fmod kann für Werte knapp unter 0 genau 2.0 liefern
        return 0.0 if reduced >= 2.0 else reduced

    @staticmethod
    def arg_over_pi(value: complex) -> float:
        """Argument of a nonzero complex number as a multiple of pi in [0, 2)"""
        if value == 0:
            raise ArgumentError("argument of zero is undefined")
        return AngleArithmetic.reduce_mod2(math.atan2(value.imag, value.real) / math.pi)

    @staticmethod
    def is_integer(value: Angle) -> bool:
        if isinstance(value, Fraction):
            return value.denominator == 1
        return float(value).is_integer()

    @staticmethod
    def nearest_integer(value: Angle) -> int:
        if isinstance(value, Fraction):
            return round(value)
        return int(round(float(value)))

    @staticmethod
    def distance_to_integer(value: Angle) -> float:
        """Distance of ``value`` to the nearest integer (0 for exact integers)"""
        if isinstance(value, Fraction):
            return float(abs(value - round(value)))
        value = float(value)
        return abs(value - round(value))

    @staticmethod
    def to_radians(over_pi: Angle) -> float:
        return float(over_pi) * math.pi

    @staticmethod
    def from_radians(angle: float) -> float:
        return AngleArithmetic.reduce_mod2(angle / math.pi)


reduce_mod2 = AngleArithmetic.reduce_mod2
arg_over_pi = AngleArithmetic.arg_over_pi
distance_to_integer = AngleArithmetic.distance_to_integer
