"""Application settings and configuration management using Pydantic."""

from functools import lru_cache
from typing import Optional

from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Process-level settings shared by every subcommand."""

    # Environment and deployment
    environment: str = "development"
    debug: bool = False

    # Working directories
    cache_dir: str = "data/cache"
    fixtures_dir: Optional[str] = None
    jobs: int = 1

    # Logging settings
    log_level: str = "INFO"
    log_format: str = "plain"  # 'structured' or 'plain'
    log_file_enabled: bool = False
    log_file_path: str = "data/bitextminer.log"
    log_max_file_size: str = "10MB"
    log_backup_count: int = 5

    # HTTP settings for live crawling
    http_user_agent: str = "bitextminer/0.1 (comparable corpus crawler)"
    http_timeout_seconds: float = 30.0
    http_max_retries: int = 3
    http_backoff_seconds: float = 0.5

    model_config = SettingsConfigDict(
        env_prefix="BITEXTMINER_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    @field_validator("environment")
    @classmethod
    def validate_environment(cls, v: str) -> str:
        """Validate environment setting."""
        valid_environments = ["development", "testing", "production"]
        if v.lower() not in valid_environments:
            raise ValueError(f"Environment must be one of: {valid_environments}")
        return v.lower()

    @field_validator("jobs")
    @classmethod
    def validate_jobs(cls, v: int) -> int:
        """Validate worker count."""
        if v < 1 or v > 256:
            raise ValueError("jobs must be between 1 and 256")
        return v

    @field_validator("http_max_retries")
    @classmethod
    def validate_retries(cls, v: int) -> int:
        """Validate retry count."""
        if v < 0 or v > 10:
            raise ValueError("http_max_retries must be between 0 and 10")
        return v

    @field_validator("http_timeout_seconds", "http_backoff_seconds")
    @classmethod
    def validate_positive_seconds(cls, v: float) -> float:
        """Validate durations are non-negative."""
        if v < 0:
            raise ValueError("Durations must be non-negative")
        return v

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Validate log level."""
        valid_levels = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
        if v.upper() not in valid_levels:
            raise ValueError(f"Log level must be one of: {valid_levels}")
        return v.upper()

    @field_validator("log_format")
    @classmethod
    def validate_log_format(cls, v: str) -> str:
        """Validate log format."""
        valid_formats = ["structured", "plain"]
        if v.lower() not in valid_formats:
            raise ValueError(f"Log format must be one of: {valid_formats}")
        return v.lower()


@lru_cache()
def get_settings() -> Settings:
    """
    Get cached application settings.

    Returns:
        Settings: Application configuration instance
    """
    return Settings()
