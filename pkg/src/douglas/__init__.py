from .theorem33 import decide_theorem33, DECISION_MODES
from .boundary import boundary_zeros
from .criteria import (
    boundary_criterion,
    iterated_berezin_criterion,
    fredholm_equiv_check,
    powered_poisson_criterion,
)

__all__ = [
    'decide_theorem33',
    'DECISION_MODES',
    'boundary_zeros',
    'boundary_criterion',
    'iterated_berezin_criterion',
    'fredholm_equiv_check',
    'powered_poisson_criterion',
]
