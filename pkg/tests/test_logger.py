import logging

import src.core.logger as logger_module
from src.config import AppSettings, LoggingConstants
from src.core.logger import Logger, enable_debug_logging, main_logger


def _file_handlers(log: Logger, path) -> list:
    return [
        handler for handler in log.get_logger_instance().handlers
        if isinstance(handler, logging.FileHandler) and handler.baseFilename == str(path)
    ]


def _detach(log: Logger, path) -> None:
    for handler in _file_handlers(log, path):
        log.get_logger_instance().removeHandler(handler)
        handler.close()


def test_same_file_is_attached_once(tmp_path):
    log = Logger(name="bergtol.handler_test", console_output=False)
    path = tmp_path / "logs" / "debug.log"
    try:
        log.add_file_handler(str(path), "DEBUG")
        log.add_file_handler(str(path), "DEBUG")
        assert len(_file_handlers(log, path)) == 1
        assert log.has_file_handler(str(path))
    finally:
        _detach(log, path)


def test_repeated_debug_setup_writes_each_record_once(tmp_path, monkeypatch):
    path = tmp_path / "debug.log"
    monkeypatch.setattr(logger_module, "debug_log_path", str(path))
    monkeypatch.setattr(AppSettings, "file_logging_requested", staticmethod(lambda: True))
    try:
        # einmal beim Import, einmal aus main()
        enable_debug_logging()
        enable_debug_logging()
        main_logger.debug("genau einmal")
        handlers = _file_handlers(main_logger, path)
        assert len(handlers) == 1
        handlers[0].flush()
        assert path.read_text().count("genau einmal") == 1
    finally:
        _detach(main_logger, path)
        main_logger.set_console_level(LoggingConstants.DEFAULT_LOG_LEVEL)
