from .quadrature import DiscQuadrature, berezin_weights, choose_quadrature, kernel_weights
from .series import (
    berezin_monomial_series,
    berezin_radial_series,
    radial_moments,
    required_moment_count,
)
from .transform import (
    kernel,
    berezin_quad,
    berezin_quad_estimate,
    berezin,
    berezin_abs_lower_bound,
    series_available,
    ROUTES,
)
from .operator import berezin_of_matrix, kernel_coefficients
from .iterate import iterate_berezin, berezin_field
from .poisson import poisson_extend, poisson_extend_array

__all__ = [
    'DiscQuadrature',
    'berezin_weights',
    'choose_quadrature',
    'kernel_weights',
    'berezin_monomial_series',
    'berezin_radial_series',
    'radial_moments',
    'required_moment_count',
    'kernel',
    'berezin_quad',
    'berezin_quad_estimate',
    'berezin',
    'berezin_abs_lower_bound',
    'series_available',
    'ROUTES',
    'berezin_of_matrix',
    'kernel_coefficients',
    'iterate_berezin',
    'berezin_field',
    'poisson_extend',
    'poisson_extend_array',
]
