"""
Logging utilities for consistent logging across the library.

Handlers write to stderr: stdout is reserved for JSON documents emitted
by the command line tool.
"""

import functools
import logging
import sys
import time
from typing import Any, Callable, Optional, TypeVar

from nit_partitions.core.exceptions import ConfigurationError


# Default log format
DEFAULT_FORMAT = (
    "%(asctime)s | %(name)s | %(levelname)s | %(message)s"
)

# Detailed format with file/line info
DETAILED_FORMAT = (
    "%(asctime)s | %(name)s | %(levelname)s | "
    "%(filename)s:%(lineno)d | %(message)s"
)

PACKAGE_LOGGER = "nit_partitions"

F = TypeVar("F", bound=Callable[..., Any])


def get_logger(
    name: str,
    level: Optional[str] = None,
    detailed: bool = False
) -> logging.Logger:
    """Get configured logger

    Args:
        name: Logger name (typically __name__)
        level: Log level (DEBUG, INFO, WARNING, ERROR); inherits when None
        detailed: Whether to include file/line numbers

    Returns:
        Configured logger instance
    """
    logger = logging.getLogger(name)

    # Only the package root carries a handler; children propagate to it
    root = logging.getLogger(PACKAGE_LOGGER)
    if not root.handlers:
        handler = logging.StreamHandler(sys.stderr)
        fmt = DETAILED_FORMAT if detailed else DEFAULT_FORMAT
        handler.setFormatter(logging.Formatter(fmt))
        root.addHandler(handler)
        root.setLevel(logging.WARNING)

    if level is not None:
        numeric = logging.getLevelName(level.upper())
        if not isinstance(numeric, int):
            raise ConfigurationError(
                f"Unknown log level {level!r}", details={"level": level}
            )
        logger.setLevel(numeric)

    return logger


def set_level(level: str) -> None:
    """Set the level of the package root logger"""
    get_logger(PACKAGE_LOGGER, level=level)


def log_execution_time(logger: logging.Logger) -> Callable[[F], F]:
    """Decorator to log function execution time at DEBUG"""
    def decorator(func: F) -> F:
        @functools.wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> Any:
            start = time.perf_counter()
            result = func(*args, **kwargs)
            duration = time.perf_counter() - start
            logger.debug(f"{func.__name__} completed in {duration:.3f}s")
            return result
        return wrapper  # type: ignore[return-value]
    return decorator


__all__ = ["get_logger", "set_level", "log_execution_time"]
