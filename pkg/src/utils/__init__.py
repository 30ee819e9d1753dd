from .angles import AngleArithmetic, reduce_mod2, arg_over_pi, distance_to_integer
from .validators import (
    Validators,
    require_closed_disc,
    require_open_disc,
    require_positive_int,
    parse_rational,
    parse_complex,
)

__all__ = [
    'AngleArithmetic',
    'reduce_mod2',
    'arg_over_pi',
    'distance_to_integer',
    'Validators',
    'require_closed_disc',
    'require_open_disc',
    'require_positive_int',
    'parse_rational',
    'parse_complex',
]
