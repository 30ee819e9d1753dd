from dataclasses import fields, is_dataclass
from enum import Enum
from fractions import Fraction
import math

import numpy as np


def to_jsonable(value):
    """Convert model values into JSON-ready Python structures."""
    if isinstance(value, BaseModel):
        return value.to_dict()
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if math.isfinite(value):
            return value
        return "nan" if math.isnan(value) else ("inf" if value > 0 else "-inf")
    if isinstance(value, (complex, np.complexfloating)):
        return {"re": to_jsonable(float(value.real)), "im": to_jsonable(float(value.imag))}
    if isinstance(value, np.ndarray):
        return [to_jsonable(item) for item in value.tolist()] if value.ndim else to_jsonable(value.item())
    if isinstance(value, dict):
        return {str(key): to_jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(item) for item in value]
    return value


# Basis-Model für gemeinsame Funktionalität
class BaseModel:
    """Mixin for dataclass models: JSON-ready dictionary export"""

    def to_dict(self):
        """Konvertiert Model zu Dictionary"""
        if not is_dataclass(self):
            return {key: to_jsonable(value) for key, value in self.__dict__.items()
                    if not key.startswith('_')}
        return {field.name: to_jsonable(getattr(self, field.name)) for field in fields(self)
                if not field.name.startswith('_')}
