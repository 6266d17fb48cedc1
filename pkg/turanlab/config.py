"""Configuration settings for turanlab."""

from pydantic import field_validator
from pydantic_settings import BaseSettings
import psutil


# Hardcoded configuration
MAX_VERTICES = 64
GRAPH6_MAX_VERTICES = 62
CANONICAL_MAX_ORDER = 10
ENUMERATION_DEFAULT_ORDER = 9
ENUMERATION_MAX_ORDER = 10
MULTIPARTITE_TYPES_MAX_ORDER = 8
TABLE_HARD_MAX_ORDER = 8
EXTREMAL_MAX_ORDER = 9
EXTREMAL_FULL_MAX_ORDER = 8
PARALLEL_MIN_ITEMS = 256
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
TOOL_NAME = "turanlab"
TOOL_VERSION = "1.0.0"


def _default_threads() -> int:
    return psutil.cpu_count(logical=False) or 1


class Settings(BaseSettings):
    """Runtime settings, read from TURANLAB_* environment variables."""

    # Upper bound on worker processes used by parallel maps
    threads: int = _default_threads()

    # Log level for the diagnostic stream
    log_level: str = "WARNING"

    # Largest type order built by tables without an explicit override (hard cap 8)
    table_max_order: int = 6

    # Restrict extremal searches to edge-maximal K_k-free graphs
    extremal_maximal_only: bool = True

    @field_validator("threads")
    @classmethod
    def _at_least_one(cls, value: int) -> int:
        return max(1, value)

    @field_validator("table_max_order")
    @classmethod
    def _within_hard_cap(cls, value: int) -> int:
        if value > TABLE_HARD_MAX_ORDER:
            raise ValueError(f"table_max_order must be at most {TABLE_HARD_MAX_ORDER}")
        return value

    class Config:
        env_prefix = "TURANLAB_"
        env_file = ".env"
        env_file_encoding = "utf-8"


settings = Settings()
