"""
bergtol - Invertierbarkeit von Toeplitz-Operatoren auf dem Bergman-Raum

Symbole, Berezin-Transformation, endliche Abschnitte, Zertifikate und das
Entscheidungsverfahren für harmonische Polynome in Normalform.
"""

__version__ = "1.0.0"
__license__ = "MIT"

from .config import AppSettings
from .main import main

__all__ = ['main', 'AppSettings']
