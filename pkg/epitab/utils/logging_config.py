"""
Logging configuration for epitab
"""
import logging
import os
from datetime import datetime
from typing import Optional

from epitab.config import LOG_DATE_FORMAT, LOG_FORMAT


def setup_logging(log_dir: Optional[str] = None, debug: bool = False, log_level: str = 'INFO'):
    """
    Setup logging to the console and, optionally, to a file.

    Args:
        log_dir: Directory for log files (no file handler when None)
        debug: If True, set log level to DEBUG
        log_level: Log level string (default: 'INFO')

    Returns:
        Logger instance
    """
    level = logging.DEBUG if debug else getattr(logging, log_level.upper())

    logger = logging.getLogger('epitab')
    logger.setLevel(level)

    # Remove existing handlers to avoid duplicates
    logger.handlers.clear()

    # Solver output goes to stdout, so diagnostics go to stderr
    console_handler = logging.StreamHandler()
    console_handler.setLevel(level)
    console_handler.setFormatter(logging.Formatter(LOG_FORMAT, LOG_DATE_FORMAT))
    logger.addHandler(console_handler)

    if log_dir:
        os.makedirs(log_dir, exist_ok=True)
        timestamp = datetime.now().strftime('%Y%m%d_%H%M%S')
        log_filename = os.path.join(log_dir, f"epitab_{timestamp}.log")
        file_handler = logging.FileHandler(log_filename)
        file_handler.setLevel(level)
        file_handler.setFormatter(logging.Formatter(LOG_FORMAT, LOG_DATE_FORMAT))
        logger.addHandler(file_handler)
        logger.info(f"Logging initialized. Log file: {log_filename}")

    return logger


def get_logger(name):
    """
    Get a logger instance for a specific module.

    Args:
        name: Logger name (usually __name__)

    Returns:
        Logger instance
    """
    if name.startswith('epitab.'):
        name = name[len('epitab.'):]
    return logging.getLogger(f'epitab.{name}')
