"""Configuration module for loopsmith."""

import logging
import os

from .errors import ConfigError


def _positive_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError as exc:
        raise ConfigError(f"{name} must be an integer, got {raw!r}") from exc
    if value < 1:
        raise ConfigError(f"{name} must be at least 1, got {value}")
    return value


class Config:
    """Configuration class for loopsmith, resolved from the environment."""

    def __init__(self) -> None:
        """Initialize configuration with environment variables."""
        self.jobs: int = _positive_int("LOOPSMITH_JOBS", os.cpu_count() or 1)
        self.log_level: str = os.getenv("LOOPSMITH_LOG_LEVEL", "WARNING").upper()
        self.parallel_min_order: int = _positive_int("LOOPSMITH_PARALLEL_MIN_ORDER", 48)
        self.chunk_rows: int = _positive_int("LOOPSMITH_CHUNK_ROWS", 8)

        if not isinstance(logging.getLevelName(self.log_level), int):
            raise ConfigError(f"LOOPSMITH_LOG_LEVEL is not a logging level: {self.log_level!r}")

    @property
    def numeric_log_level(self) -> int:
        """Get the log level as the integer the logging module uses."""
        return int(logging.getLevelName(self.log_level))
