import cmath
import math
from fractions import Fraction
from typing import Union

import numpy as np

from ..config import DomainConstants
from ..core import validators_logger
from ..core.exceptions import ArgumentError, DomainError

RationalLike = Union[int, float, str, Fraction]


class Validators:
    """Centralized domain checks; the require_* methods raise, the is_* methods only report"""

    @staticmethod
    def is_finite_complex(value: complex) -> bool:
        return cmath.isfinite(complex(value))

    @staticmethod
    def require_finite_complex(value, name: str = "value") -> complex:
        try:
            value = complex(value)
        except (TypeError, ValueError) as e:
            raise ArgumentError(f"{name} is not a complex number: {value!r}") from e
        if not cmath.isfinite(value):
            validators_logger.warning(f"Nicht-endlicher Wert für {name}: {value}")
            raise DomainError(f"{name} must be finite, got {value}")
        return value

    @staticmethod
    def require_finite_real(value, name: str = "value") -> float:
        try:
            value = float(value)
        except (TypeError, ValueError) as e:
            raise ArgumentError(f"{name} is not a real number: {value!r}") from e
        if not math.isfinite(value):
            raise DomainError(f"{name} must be finite, got {value}")
        return value

    @staticmethod
    def is_in_closed_disc(z: complex, slack: float = DomainConstants.CLOSED_DISC_SLACK) -> bool:
        return abs(z) <= 1.0 + slack

    @staticmethod
    def require_closed_disc(z, name: str = "z", slack: float = DomainConstants.CLOSED_DISC_SLACK) -> complex:
        """Evaluation points on the closed unit disc (|z| <= 1 + slack)"""
        z = Validators.require_finite_complex(z, name)
        if abs(z) > 1.0 + slack:
            validators_logger.debug(f"{name}={z} außerhalb der abgeschlossenen Kreisscheibe")
            raise DomainError(f"{name} = {z} lies outside the closed unit disc (|{name}| = {abs(z)})")
        return z

    @staticmethod
    def require_open_disc(z, name: str = "z") -> complex:
        z = Validators.require_finite_complex(z, name)
        if abs(z) >= 1.0:
            raise DomainError(f"{name} = {z} must lie in the open unit disc (|{name}| = {abs(z)})")
        return z

    @staticmethod
    def require_open_interval(value, low: float, high: float, name: str = "value") -> float:
        value = Validators.require_finite_real(value, name)
        if not (low < value < high):
            raise DomainError(f"{name} must lie in ({low}, {high}), got {value}")
        return value

    @staticmethod
    def require_half_open_interval(value, low: float, high: float, name: str = "value") -> float:
        """low < value <= high"""
        value = Validators.require_finite_real(value, name)
        if not (low < value <= high):
            raise ArgumentError(f"{name} must lie in ({low}, {high}], got {value}")
        return value

    @staticmethod
    def require_positive_int(value, name: str = "value", minimum: int = 1) -> int:
        if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
            raise ArgumentError(f"{name} must be an integer, got {value!r}")
        value = int(value)
        if value < minimum:
            raise ArgumentError(f"{name} must be at least {minimum}, got {value}")
        return value

    @staticmethod
    def parse_rational(value: RationalLike, name: str = "value") -> Fraction:
        """
        Exact rational from an int, a decimal string, a "p/q" string or a float.

        Floats are read through their shortest decimal representation, so a
        JSON value like -1.5 becomes exactly -3/2.

        Raises:
            ArgumentError: if the value cannot be read as a rational number
        """
        if isinstance(value, bool):
            raise ArgumentError(f"{name} must be a number, got a boolean")
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, float):
            if not math.isfinite(value):
                raise ArgumentError(f"{name} must be finite, got {value}")
            return Fraction(repr(value))
        if isinstance(value, str):
            try:
                return Fraction(value.strip())
            except (ValueError, ZeroDivisionError) as e:
                raise ArgumentError(f"{name}: cannot read {value!r} as a rational number") from e
        raise ArgumentError(f"{name} must be a number or rational string, got {type(value).__name__}")

    @staticmethod
    def parse_complex(text: str, name: str = "z") -> complex:
        """
        Read a point such as "0+0i", "0.5-0.25i", "1j" or "-0.3".

        Raises:
            ArgumentError: on malformed input
        """
        cleaned = text.strip().replace(" ", "").replace("i", "j")
        try:
            value = complex(cleaned)
        except ValueError as e:
            raise ArgumentError(f"{name}: cannot read {text!r} as a complex number (expected RE+IMi)") from e
        return Validators.require_finite_complex(value, name)


# Modul-Aliase
require_closed_disc = Validators.require_closed_disc
require_open_disc = Validators.require_open_disc
require_positive_int = Validators.require_positive_int
parse_rational = Validators.parse_rational
parse_complex = Validators.parse_complex
