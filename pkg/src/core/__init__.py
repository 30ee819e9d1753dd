from .logger import (
    Logger,
    main_logger,
    symbols_logger,
    geometry_logger,
    berezin_logger,
    toeplitz_logger,
    douglas_logger,
    cli_logger,
    config_logger,
    validators_logger,
    repro_logger,
    enable_debug_logging,
    enable_file_logging,
)
from .exceptions import (
    BergtolError,
    DomainError,
    ArgumentError,
    ParseError,
    HypothesisError,
    TheoremFormError,
    QuadratureError,
    InsufficientMomentsError,
    UsageError,
)

__all__ = [
    'Logger',
    'main_logger',
    'symbols_logger',
    'geometry_logger',
    'berezin_logger',
    'toeplitz_logger',
    'douglas_logger',
    'cli_logger',
    'config_logger',
    'validators_logger',
    'repro_logger',
    'enable_debug_logging',
    'enable_file_logging',
    'BergtolError',
    'DomainError',
    'ArgumentError',
    'ParseError',
    'HypothesisError',
    'TheoremFormError',
    'QuadratureError',
    'InsufficientMomentsError',
    'UsageError',
]
