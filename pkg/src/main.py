import os
import sys
from typing import Optional, Sequence

from .cli import run
from .config import AppSettings, ExitCodes
from .core import enable_debug_logging, main_logger


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Command line entry point; returns the exit code"""
    if AppSettings.debug_requested():
        enable_debug_logging()

    main_logger.debug(f"=== Starte {AppSettings.APP_NAME} {AppSettings.VERSION} ===")
    main_logger.debug(f"Python-Version: {sys.version}")
    main_logger.debug(f"Arbeitsverzeichnis: {os.getcwd()}")

    try:
        code = run(argv)
    except KeyboardInterrupt:
        main_logger.info("Durch Benutzer unterbrochen (Ctrl+C)")
        code = ExitCodes.INTERNAL_ERROR
    except Exception as e:
        main_logger.critical(f"Kritischer Fehler: {e}", exc_info=True)
        code = ExitCodes.INTERNAL_ERROR
    finally:
        main_logger.debug("=== Lauf beendet ===")
    return code


if __name__ == "__main__":
    sys.exit(main())
