from .matrices import (
    matrix_harmonic,
    matrix_radial,
    matrix_quadrature,
    radial_eigenvalues,
    build_matrix,
    default_matrix_spec,
    MATRIX_ROUTES,
)
from .spectrum import singular_extremes, singular_sweep
from .certificates import neumann_certificate, luecking_bound

__all__ = [
    'matrix_harmonic',
    'matrix_radial',
    'matrix_quadrature',
    'radial_eigenvalues',
    'build_matrix',
    'default_matrix_spec',
    'MATRIX_ROUTES',
    'singular_extremes',
    'singular_sweep',
    'neumann_certificate',
    'luecking_bound',
]
