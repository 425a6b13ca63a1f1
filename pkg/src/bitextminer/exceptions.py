"""Custom exception classes and error handling for bitextminer."""

from typing import Any, Dict, Optional

from pydantic import ValidationError

from .config.logging import get_logger

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_CONFIG_ERROR = 2
EXIT_STAGE_FAILURE = 3


class BitextMinerError(Exception):
    """Base exception for bitextminer."""

    def __init__(
        self,
        message: str,
        exit_code: int = EXIT_STAGE_FAILURE,
        details: Optional[Dict[str, Any]] = None,
    ):
        super().__init__(message)
        self.message = message
        self.exit_code = exit_code
        self.details = details or {}


class ConfigurationError(BitextMinerError):
    """Exception for configuration errors."""

    def __init__(
        self,
        setting: str,
        message: str,
        field_errors: Optional[Dict[str, str]] = None,
    ):
        details: Dict[str, Any] = {"setting": setting}
        if field_errors:
            details["field_errors"] = field_errors
        super().__init__(
            message=f"Configuration error for '{setting}': {message}",
            exit_code=EXIT_CONFIG_ERROR,
            details=details,
        )

    @classmethod
    def from_validation_error(
        cls, setting: str, exc: ValidationError
    ) -> "ConfigurationError":
        """Build a configuration error listing every invalid field."""
        field_errors = {}
        for error in exc.errors():
            field_path = ".".join(str(loc) for loc in error["loc"]) or "<root>"
            field_errors[field_path] = error["msg"]
        summary = "; ".join(f"{path}: {msg}" for path, msg in field_errors.items())
        return cls(setting, summary, field_errors=field_errors)


class StageFailure(BitextMinerError):
    """Exception raised when a pipeline stage fails."""

    def __init__(self, stage: str, message: str, doc_id: Optional[str] = None):
        where = f" (document {doc_id})" if doc_id else ""
        super().__init__(
            message=f"Stage '{stage}' failed{where}: {message}",
            exit_code=EXIT_STAGE_FAILURE,
            details={"stage": stage, "doc_id": doc_id},
        )
        self.stage = stage
        self.doc_id = doc_id


class EmptyDocumentError(BitextMinerError):
    """Exception for documents that are empty after markup removal."""

    def __init__(self, url: str, lang: str):
        super().__init__(
            message=f"No text left after cleaning {url} ({lang})",
            details={"url": url, "lang": lang},
        )
        self.url = url


class FetchError(BitextMinerError):
    """Exception for pages that could not be fetched."""

    def __init__(self, url: str, message: str, attempts: int = 1):
        super().__init__(
            message=f"Failed to fetch {url} after {attempts} attempt(s): {message}",
            details={"url": url, "attempts": attempts},
        )
        self.url = url


class TranslationEngineError(BitextMinerError):
    """Exception for translation engine failures on a specific line."""

    def __init__(self, engine: str, line_index: int, message: str):
        super().__init__(
            message=f"Translation engine '{engine}' failed on line {line_index}: {message}",
            details={"engine": engine, "line_index": line_index},
        )
        self.line_index = line_index


class InputMismatchError(BitextMinerError):
    """Exception for line-parallel inputs whose lengths disagree."""

    def __init__(self, what: str, expected: int, actual: int):
        super().__init__(
            message=f"{what}: expected {expected} lines, got {actual}",
            details={"expected": expected, "actual": actual},
        )


class EmptyCorpusError(BitextMinerError):
    """Exception for metric computations over an empty corpus."""

    def __init__(self, metric: str):
        super().__init__(
            message=f"Cannot compute {metric} over an empty corpus",
            details={"metric": metric},
        )


class AlignmentFormatError(BitextMinerError):
    """Exception for malformed alignment, lexicon or Pharaoh files."""

    def __init__(self, path: str, line_number: int, message: str):
        super().__init__(
            message=f"{path}:{line_number}: {message}",
            details={"path": path, "line_number": line_number},
        )


def handle_cli_exception(exc: BaseException) -> int:
    """Log an exception raised by a subcommand and map it to an exit code."""
    if isinstance(exc, BitextMinerError):
        logger.error(
            "Command failed",
            exception_type=type(exc).__name__,
            message=exc.message,
            details=exc.details,
            exit_code=exc.exit_code,
        )
        return exc.exit_code

    logger.error(
        "Unexpected exception occurred",
        exception_type=type(exc).__name__,
        message=str(exc),
        exc_info=exc,
    )
    return EXIT_STAGE_FAILURE
