# config/logging.py

import functools
import logging
import logging.handlers
import sys
import time
from datetime import datetime
from pathlib import Path


def setup_logging(
        log_level: str = "INFO",
        log_dir: str = "logs",
        log_to_console: bool = True,
        log_to_file: bool = False
):
    """
    Configure logging for the application.

    Console output goes to stderr so that reports written to stdout stay
    byte-identical between runs.

    Args:
        log_level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        log_dir: Directory for log files
        log_to_console: Whether to log to console
        log_to_file: Whether to log to file
    """
    level = getattr(logging, log_level.upper(), None)
    if not isinstance(level, int):
        raise ValueError(f"Invalid log level: {log_level}")

    root_logger = logging.getLogger()
    root_logger.setLevel(level)

    # Remove existing handlers
    root_logger.handlers = []

    detailed_formatter = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(filename)s:%(lineno)d - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )

    simple_formatter = logging.Formatter(
        '%(asctime)s - %(levelname)s - %(message)s',
        datefmt='%H:%M:%S'
    )

    if log_to_console:
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(level)
        console_handler.setFormatter(simple_formatter)
        root_logger.addHandler(console_handler)

    if log_to_file:
        log_path = Path(log_dir)
        log_path.mkdir(parents=True, exist_ok=True)

        main_log_file = log_path / f"spectra_{datetime.now().strftime('%Y%m%d')}.log"
        file_handler = logging.handlers.RotatingFileHandler(
            main_log_file,
            maxBytes=10 * 1024 * 1024,  # 10MB
            backupCount=5
        )
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(detailed_formatter)
        root_logger.addHandler(file_handler)

        error_handler = logging.handlers.RotatingFileHandler(
            log_path / "errors.log",
            maxBytes=5 * 1024 * 1024,  # 5MB
            backupCount=3
        )
        error_handler.setLevel(logging.ERROR)
        error_handler.setFormatter(detailed_formatter)
        root_logger.addHandler(error_handler)

    loggers_config = {
        'src.core': logging.INFO,
        'src.application': logging.INFO,
        'src.infrastructure': logging.INFO,
        'src.presentation': logging.INFO,
    }

    for logger_name, logger_level in loggers_config.items():
        logging.getLogger(logger_name).setLevel(min(level, logger_level))

    root_logger.debug(f"Logging initialized at {log_level} (file logging: {log_to_file})")


def get_logger(name: str) -> logging.Logger:
    """Get a logger instance."""
    return logging.getLogger(name)


def log_performance(logger: logging.Logger):
    """Decorator to log how long a computation took."""

    def decorator(func):
        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            start_time = time.perf_counter()
            try:
                result = func(*args, **kwargs)
            except Exception:
                elapsed_time = time.perf_counter() - start_time
                logger.error(f"{func.__name__} failed after {elapsed_time:.3f} seconds")
                raise
            elapsed_time = time.perf_counter() - start_time
            logger.info(f"{func.__name__} executed in {elapsed_time:.3f} seconds")
            return result

        return wrapper

    return decorator
