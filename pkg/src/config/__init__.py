from .settings import AppSettings
from .constants import (
    DomainConstants,
    GridConstants,
    QuadratureConstants,
    DecisionConstants,
    ExitCodes,
    LoggingConstants,
)

__all__ = [
    'AppSettings',
    'DomainConstants',
    'GridConstants',
    'QuadratureConstants',
    'DecisionConstants',
    'ExitCodes',
    'LoggingConstants',
]
