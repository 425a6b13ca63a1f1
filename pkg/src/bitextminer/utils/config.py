"""Application bootstrapping shared by every subcommand."""

from pathlib import Path
from typing import Optional

from ..config.logging import get_logger, setup_logging
from ..config.settings import Settings, get_settings


def ensure_cache_directory(settings: Optional[Settings] = None) -> Path:
    """Ensure the translation cache directory exists."""
    settings = settings or get_settings()
    cache_path = Path(settings.cache_dir)
    cache_path.mkdir(parents=True, exist_ok=True)
    get_logger(__name__).debug("Ensured cache directory exists", path=str(cache_path))
    return cache_path


def initialize_application(verbose: bool = False) -> Settings:
    """
    Initialize configuration and logging.

    ``verbose`` forces DEBUG regardless of the configured log level.
    """
    settings = get_settings()

    setup_logging(
        level="DEBUG" if verbose or settings.debug else settings.log_level,
        format_type=settings.log_format,
        file_enabled=settings.log_file_enabled,
        file_path=settings.log_file_path,
        max_file_size=settings.log_max_file_size,
        backup_count=settings.log_backup_count,
    )

    logger = get_logger(__name__)
    logger.debug(
        "Application initialized",
        environment=settings.environment,
        debug=settings.debug,
        jobs=settings.jobs,
    )
    return settings
