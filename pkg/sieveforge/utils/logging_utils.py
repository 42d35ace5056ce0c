"""
Logging configuration utilities.
"""

import logging
import logging.handlers
import sys
from pathlib import Path

from pythonjsonlogger import jsonlogger

from sieveforge.config.models import LoggingSettings


def setup_logging(settings: LoggingSettings, debug: bool = False) -> None:
    """
    Configure application logging based on settings.

    Reports own stdout, so the console handler writes to stderr.

    Args:
        settings: Logging configuration settings
        debug: Force DEBUG level regardless of settings
    """
    level = logging.DEBUG if debug else getattr(logging, settings.level)

    root_logger = logging.getLogger()
    root_logger.setLevel(level)

    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)

    if settings.enable_json_logs:
        formatter: logging.Formatter = jsonlogger.JsonFormatter(
            "%(asctime)s %(name)s %(levelname)s %(message)s"
        )
    else:
        formatter = logging.Formatter(settings.format_string)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(level)
    console_handler.setFormatter(formatter)
    root_logger.addHandler(console_handler)

    if settings.file_path:
        log_file = Path(settings.file_path)
        log_file.parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.handlers.RotatingFileHandler(
            log_file,
            maxBytes=settings.max_file_size_mb * 1024 * 1024,
            backupCount=settings.backup_count,
        )
        file_handler.setLevel(level)
        file_handler.setFormatter(formatter)
        root_logger.addHandler(file_handler)


def get_logger(name: str | None = None) -> logging.Logger:
    """
    Get a logger instance.

    Args:
        name: Logger name (defaults to __name__ of caller)

    Returns:
        Logger instance
    """
    return logging.getLogger(name)
