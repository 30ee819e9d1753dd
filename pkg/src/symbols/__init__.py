from .base import BaseSymbol
from .coefficients import Coefficient, PolarCoefficient
from .harmonic import HarmonicPolynomial, MonomialTerm, eval_harmonic
from .radial import RadialSymbol, eval_radial
from .sampled import SampledSymbol
from .modulus import ModulusSymbol, modulus_of
from .boundary import TrigPolynomial, BoundarySamples
from .norms import sup_norm, check_theorem33_form, theorem33_note
from .parser import parse_symbol, serialize_symbol, load_symbol

__all__ = [
    'BaseSymbol',
    'Coefficient',
    'PolarCoefficient',
    'HarmonicPolynomial',
    'MonomialTerm',
    'RadialSymbol',
    'SampledSymbol',
    'ModulusSymbol',
    'modulus_of',
    'TrigPolynomial',
    'BoundarySamples',
    'sup_norm',
    'check_theorem33_form',
    'theorem33_note',
    'parse_symbol',
    'serialize_symbol',
    'load_symbol',
    'eval_harmonic',
    'eval_radial',
]
