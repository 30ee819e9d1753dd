# Import der benötigten Bibliotheken
import logging
import os
import sys
from typing import Any, Dict, Literal, Optional

# Import der Anwendungseinstellungen
from ..config import AppSettings, LoggingConstants

# Erlaubte Log-Level als Literal
LogLevel = Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


class Logger:
    """
    Thin wrapper around a standard library logger.

    Console output goes to stderr so that stdout stays reserved for the
    JSON/CSV results of the command line; file output is opt-in.
    """

    def __init__(
        self,
        name: str = "bergtol",
        log_level: LogLevel = "INFO",
        log_format: str = LoggingConstants.LOG_FORMAT,
        log_file: Optional[str] = None,
        console_output: bool = True,
        propagate: bool = False
    ):
        """
        Args:
            name: logger name, shown in every record
            log_level: threshold for records handled by this logger
            log_format: format string for all handlers
            log_file: optional path of a log file
            console_output: attach a stderr handler
            propagate: forward records to the parent logger
        """
        self.logger = logging.getLogger(name)
        self.logger.propagate = propagate
        self.logger.setLevel(getattr(logging, log_level))

        formatter = logging.Formatter(log_format)

        # Vorhandene Handler entfernen, um Mehrfachausgaben zu vermeiden
        for handler in self.logger.handlers[:]:
            self.logger.removeHandler(handler)

        if console_output:
            console_handler = logging.StreamHandler(sys.stderr)
            console_handler.setFormatter(formatter)
            self.logger.addHandler(console_handler)

        if log_file:
            os.makedirs(os.path.dirname(log_file), exist_ok=True)
            file_handler = logging.FileHandler(log_file)
            file_handler.setFormatter(formatter)
            self.logger.addHandler(file_handler)

    def debug(self, message: str, extra: Optional[Dict[str, Any]] = None) -> None:
        self.logger.debug(message, extra=extra)

    def info(self, message: str, extra: Optional[Dict[str, Any]] = None) -> None:
        self.logger.info(message, extra=extra)

    def warning(self, message: str, extra: Optional[Dict[str, Any]] = None, exc_info: bool = False) -> None:
        self.logger.warning(message, extra=extra, exc_info=exc_info)

    def error(self, message: str, extra: Optional[Dict[str, Any]] = None, exc_info: bool = False) -> None:
        self.logger.error(message, extra=extra, exc_info=exc_info)

    def critical(self, message: str, extra: Optional[Dict[str, Any]] = None, exc_info: bool = False) -> None:
        self.logger.critical(message, extra=extra, exc_info=exc_info)

    def exception(self, message: str, exc_info=True, extra: Optional[Dict[str, Any]] = None) -> None:
        """Log a message together with the active exception's traceback."""
        self.logger.exception(message, exc_info=exc_info, extra=extra)

    def log_timing(self, operation: str, duration_ms: float, **details: Any) -> None:
        """
        Record the duration of a numerical operation.

        Args:
            operation: short operation name, e.g. "berezin_quad"
            duration_ms: elapsed wall time in milliseconds
            details: additional key/value context (orders, dimensions, ...)
        """
        detail_text = ", ".join(f"{key}={value}" for key, value in sorted(details.items()))
        self.debug(
            f"{operation} in {duration_ms:.2f}ms" + (f" ({detail_text})" if detail_text else ""),
            extra={"operation": operation, "duration_ms": duration_ms},
        )

    def log_error(self, error: Exception, context: Optional[Dict[str, Any]] = None) -> None:
        """
        Log an error with its type and optional context (command, symbol path, ...).

        Args:
            error: the exception to record
            context: additional information about the failing run
        """
        extra = {"error_type": type(error).__name__}
        if context:
            extra.update(context)
        self.exception(f"Error: {str(error)}", extra=extra)

    def set_level(self, level: LogLevel) -> None:
        """Change the level of this logger at runtime."""
        self.logger.setLevel(getattr(logging, level))

    def set_console_level(self, level: LogLevel) -> None:
        for handler in self.logger.handlers:
            if isinstance(handler, logging.StreamHandler) and not isinstance(handler, logging.FileHandler):
                handler.setLevel(getattr(logging, level))

    def has_file_handler(self, log_file: str) -> bool:
        """True when a file handler for ``log_file`` is already attached"""
        path = os.path.abspath(log_file)
        return any(
            isinstance(handler, logging.FileHandler) and handler.baseFilename == path
            for handler in self.logger.handlers
        )

    def add_file_handler(self, log_file: str, level: Optional[LogLevel] = None) -> None:
        """
        Attach an additional file handler, e.g. an errors-only log.
        A second call for the same file is ignored.

        Args:
            log_file: path of the log file
            level: optional level filter for this handler only
        """
        if self.has_file_handler(log_file):
            return
        os.makedirs(os.path.dirname(log_file), exist_ok=True)
        file_handler = logging.FileHandler(log_file)
        file_handler.setFormatter(logging.Formatter(LoggingConstants.LOG_FORMAT))
        if level:
            file_handler.setLevel(getattr(logging, level))
        self.logger.addHandler(file_handler)

    def get_logger_instance(self) -> logging.Logger:
        return self.logger

    def create_child_logger(self, suffix: str) -> 'Logger':
        """
        Create a child logger named ``parent.suffix``.

        Children have no handlers of their own and propagate to the parent,
        so level and handler configuration stays in one place.
        """
        child_name = f"{self.logger.name}.{suffix}"
        return Logger(
            name=child_name,
            log_level="DEBUG",
            propagate=True,
            console_output=False,
            log_file=None
        )


def setup_application_logging():
    """Return (application log, error log, debug log) paths."""
    try:
        log_dir = AppSettings.get_logs_dir()
        return (
            os.path.join(log_dir, "application.log"),
            os.path.join(log_dir, "errors.log"),
            os.path.join(log_dir, "debug.log"),
        )
    except (OSError, PermissionError) as e:
        fallback_dir = os.getcwd()
        print(f"Warning: Could not resolve logs directory, using fallback: {fallback_dir}: {e}", file=sys.stderr)
        return (
            os.path.join(fallback_dir, "application.log"),
            os.path.join(fallback_dir, "errors.log"),
            os.path.join(fallback_dir, "debug.log"),
        )


app_log_path, error_log_path, debug_log_path = setup_application_logging()

main_logger = Logger(
    name="bergtol",
    log_level="DEBUG",
    console_output=True,
    propagate=False
)
main_logger.set_console_level(LoggingConstants.DEFAULT_LOG_LEVEL)


def enable_file_logging():
    """Attach application and error log files (opt-in)."""
    try:
        main_logger.add_file_handler(app_log_path, "INFO")
        main_logger.add_file_handler(error_log_path, "ERROR")
        main_logger.info(f"Datei-Logging aktiviert: {app_log_path}")
    except OSError as e:
        main_logger.warning(f"Konnte Log-Dateien nicht anlegen: {e}")


def enable_debug_logging():
    """Lower the console threshold to DEBUG for all components."""
    main_logger.set_console_level("DEBUG")
    if AppSettings.file_logging_requested():
        try:
            main_logger.add_file_handler(debug_log_path, "DEBUG")
        except OSError as e:
            main_logger.warning(f"Could not add debug file handler: {e}")
    main_logger.debug("Debug-Modus aktiviert")


# Child-Logger für die einzelnen Komponenten
symbols_logger = main_logger.create_child_logger("symbols")
geometry_logger = main_logger.create_child_logger("geometry")
berezin_logger = main_logger.create_child_logger("berezin")
toeplitz_logger = main_logger.create_child_logger("toeplitz")
douglas_logger = main_logger.create_child_logger("douglas")
cli_logger = main_logger.create_child_logger("cli")
config_logger = main_logger.create_child_logger("config")
validators_logger = main_logger.create_child_logger("validators")
repro_logger = cli_logger.create_child_logger("reproduce")

if AppSettings.file_logging_requested():
    enable_file_logging()

if AppSettings.debug_requested():
    enable_debug_logging()
