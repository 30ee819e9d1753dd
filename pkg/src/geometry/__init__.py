from ..models.grid import DiskGrid
from .conditions import (
    parabolic_margin,
    scaling_constant,
    disc_condition,
    boundary_extremum,
    superlevel_set,
    margin_values,
)
from .pseudohyperbolic import (
    pseudohyperbolic_distance,
    pseudohyperbolic_disc,
    estimate_normalized_area,
    luecking_density,
    whole_disc,
    empty_set,
)
from .sufficiency import thm_sufficient_check, corollary_check, multiplier_tail_bound, rho_zero

__all__ = [
    'DiskGrid',
    'parabolic_margin',
    'scaling_constant',
    'disc_condition',
    'boundary_extremum',
    'superlevel_set',
    'margin_values',
    'pseudohyperbolic_distance',
    'pseudohyperbolic_disc',
    'estimate_normalized_area',
    'luecking_density',
    'whole_disc',
    'empty_set',
    'thm_sufficient_check',
    'corollary_check',
    'multiplier_tail_bound',
    'rho_zero',
]
