"""Application constants and configuration values"""


# Definitionsbereich und Toleranzen für Punktauswertungen
class DomainConstants:
    CLOSED_DISC_SLACK = 1e-12
    QUADRATURE_RADIUS_LIMIT = 0.999
    SERIES_ROUTE_RADIUS = 0.95
    MIN_NORM_RESOLUTION = 8


# Gitter-Konstanten
class GridConstants:
    MIN_ANGLES_PER_RING = 8
    MAX_BOUNDARY_GAP = 1e-3
    # Winkel pro Auflösungsschritt auf dem Randkreis (sup_norm)
    BOUNDARY_ANGLES_PER_RESOLUTION = 8
    RADII_PER_RESOLUTION = 8


# Quadratur-Konstanten
class QuadratureConstants:
    MIN_RADIAL_ORDER = 16
    MIN_ANGULAR_COUNT = 16
    MAX_RADIAL_ORDER = 4096
    MAX_ANGULAR_COUNT = 16384
    MAX_DOUBLINGS = 6
    MAX_MATRIX_DIMENSION = 2048
    DEFAULT_MOMENT_LIMIT = 200000


# Entscheidungs-Konstanten
class DecisionConstants:
    FORM_TOLERANCE = 1e-12
    WITNESS_TOLERANCE = 1e-10
    INCONCLUSIVE_FACTOR = 10.0
    HYPOTHESIS_SLACK = 1e-12
    BOUNDARY_ANGLES = 4096
    # Doppelte Nullstellen liegen nur auf ~1e-8 genau
    ROOT_RADIUS_TOLERANCE = 1e-6


# Exit-Codes der Kommandozeile
class ExitCodes:
    OK = 0
    INTERNAL_ERROR = 1
    HYPOTHESIS_OR_DOMAIN = 2
    USAGE = 64


# Logging constants
class LoggingConstants:
    DEFAULT_LOG_LEVEL = "WARNING"
    LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
