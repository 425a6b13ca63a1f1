"""Structured logging configuration using structlog."""

import logging
import logging.handlers
import sys
from pathlib import Path
from typing import Any, Optional

import structlog
from pydantic import ByteSize, TypeAdapter
from structlog.types import Processor

_BYTE_SIZE = TypeAdapter(ByteSize)


def setup_logging(
    level: str = "INFO",
    format_type: str = "plain",
    file_enabled: bool = False,
    file_path: str = "data/bitextminer.log",
    max_file_size: str = "10MB",
    backup_count: int = 5,
) -> None:
    """
    Set up application logging with structlog.

    Records go to stderr; stdout is reserved for command output such as the
    ``evaluate`` JSON report. Context bound with ``bound_contextvars`` (the
    pipeline binds ``stage``) is merged into every record.

    Args:
        level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        format_type: 'structured' for JSON lines, 'plain' for console output
        file_enabled: Also write records to a rotating file
        file_path: Path to log file
        max_file_size: Rotation size, e.g. '10MB' or '512KiB'
        backup_count: Number of rotated files to keep
    """
    log_level = getattr(logging, level.upper(), logging.INFO)

    logging.basicConfig(
        format="%(message)s",
        stream=sys.stderr,
        level=log_level,
        force=True,
    )

    processors: list[Processor] = [
        structlog.contextvars.merge_contextvars,
        structlog.processors.TimeStamper(fmt="ISO"),
        structlog.stdlib.add_log_level,
        structlog.stdlib.add_logger_name,
        structlog.processors.StackInfoRenderer(),
        structlog.processors.format_exc_info,
        structlog.processors.UnicodeDecoder(),
    ]

    if format_type == "structured":
        processors.append(structlog.processors.JSONRenderer(sort_keys=True, ensure_ascii=False))
    else:
        processors.append(structlog.dev.ConsoleRenderer(colors=sys.stderr.isatty()))

    structlog.configure(
        processors=processors,
        wrapper_class=structlog.stdlib.BoundLogger,
        logger_factory=structlog.stdlib.LoggerFactory(),
        context_class=dict,
        cache_logger_on_first_use=True,
    )

    if file_enabled:
        log_file = Path(file_path)
        log_file.parent.mkdir(parents=True, exist_ok=True)
        handler = logging.handlers.RotatingFileHandler(
            filename=log_file,
            maxBytes=int(_BYTE_SIZE.validate_python(max_file_size)),
            backupCount=backup_count,
            encoding="utf-8",
        )
        handler.setLevel(log_level)
        handler.setFormatter(logging.Formatter("%(message)s"))
        logging.getLogger().addHandler(handler)


def get_logger(name: Optional[str] = None) -> structlog.stdlib.BoundLogger:
    return structlog.get_logger(name)


class LoggerMixin:
    """Mixin class to add structured logging to any class."""

    @property
    def logger(self) -> structlog.stdlib.BoundLogger:
        return get_logger(self.__class__.__name__)


def log_performance(operation: str, duration_ms: float, **context: Any) -> None:
    """
    Log how long an operation took.

    Whole stages log at INFO; per-document work (``operation`` without a
    ``stage:`` prefix) logs at DEBUG so large runs stay readable.
    """
    logger = get_logger("performance")
    level = logging.INFO if operation.startswith("stage:") else logging.DEBUG
    logger.log(
        level,
        "Performance metric",
        operation=operation,
        duration_ms=round(duration_ms, 3),
        **context,
    )


def log_error(error: Exception, **context: Any) -> None:
    """
    Log an error with structured context.

    Errors carrying ``details`` (the package's own exceptions) are expected
    outcomes such as a dropped document and are logged without a traceback.
    """
    logger = get_logger("error")
    details = getattr(error, "details", None)
    if isinstance(details, dict):
        logger.warning(
            "Error occurred",
            error_type=type(error).__name__,
            error_message=str(error),
            **{**details, **context},
        )
        return
    logger.error(
        "Error occurred",
        error_type=type(error).__name__,
        error_message=str(error),
        exc_info=error,
        **context,
    )
