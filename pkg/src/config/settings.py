import logging
import os
import sys

logger = logging.getLogger(__name__)


class AppSettings:
    # Anwendungsinformationen
    APP_NAME = "bergtol"
    APP_TITLE = "bergtol - Toeplitz-Invertierbarkeit auf dem Bergman-Raum"
    VERSION = "1.0.0"

    # Schema-Bezeichner für Symbol-Dateien und Berichte
    SYMBOL_SCHEMA = "bergtol-symbol/1"
    REPORT_SCHEMA = "bergtol-report/1"

    # Numerische Standardwerte
    DEFAULT_TOLERANCE = 1e-9
    DEFAULT_QUADRATURE_TOLERANCE = 1e-10
    DEFAULT_SEED = 20240101

    # Standard-Gitter für Bedingungsprüfungen
    DEFAULT_RINGS = 256
    DEFAULT_ANGLES = 1024
    DEFAULT_BOUNDARY_GAP = 1e-6

    # Prüfgitter für Berezin-Iterationen und Randkriterien
    DEFAULT_PROBE_RINGS = 32
    DEFAULT_PROBE_ANGLES = 128

    # Auflösung für Supremumsnorm-Klammern
    DEFAULT_NORM_RESOLUTION = 512

    TOLERANCE_ENV_VAR = "BERGTOL_DEFAULT_TOL"
    LOG_DIR_ENV_VAR = "BERGTOL_LOG_DIR"
    LOG_FILE_ENV_VAR = "BERGTOL_LOG_FILE"
    DEBUG_ENV_VARS = ("BERGTOL_DEBUG", "DEBUG")

    @staticmethod
    def get_app_dir():
        return os.path.dirname(os.path.abspath(__file__))

    @staticmethod
    def get_project_root():
        """Get the project root directory (cross-platform compatible)"""
        if getattr(sys, 'frozen', False):
            return os.path.dirname(sys.executable)
        # von src/config zurück zum root
        return os.path.abspath(os.path.join(AppSettings.get_app_dir(), '..', '..'))

    @staticmethod
    def get_logs_dir():
        """Get the logs directory, honouring BERGTOL_LOG_DIR"""
        override = os.environ.get(AppSettings.LOG_DIR_ENV_VAR)
        if override:
            return override
        return os.path.join(AppSettings.get_project_root(), 'logs')

    @staticmethod
    def file_logging_requested():
        return os.environ.get(AppSettings.LOG_FILE_ENV_VAR, '').lower() in ('1', 'true', 'yes')

    @staticmethod
    def debug_requested():
        return any(
            os.environ.get(name, '').lower() in ('1', 'true', 'yes')
            for name in AppSettings.DEBUG_ENV_VARS
        )

    @staticmethod
    def get_default_tolerance():
        """Default decision tolerance, overridable through BERGTOL_DEFAULT_TOL."""
        raw = os.environ.get(AppSettings.TOLERANCE_ENV_VAR)
        if not raw:
            return AppSettings.DEFAULT_TOLERANCE
        try:
            value = float(raw)
        except ValueError:
            logger.warning(f"Ungültiger Wert {AppSettings.TOLERANCE_ENV_VAR}={raw!r} wird ignoriert")
            return AppSettings.DEFAULT_TOLERANCE
        if not (value > 0.0 and value < 1.0):
            logger.warning(f"{AppSettings.TOLERANCE_ENV_VAR}={raw!r} liegt nicht in (0, 1) und wird ignoriert")
            return AppSettings.DEFAULT_TOLERANCE
        return value
