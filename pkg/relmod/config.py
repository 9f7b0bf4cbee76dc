"""Runtime settings read from the environment.

Environment Variables:
    RELMOD_LOG_LEVEL: Logging level used by the command line (default WARNING).
    RELMOD_VERTEX_BUDGET: Maximum number of vertices in a Cayley ball.
    RELMOD_SKEW_WINDOW: Half-width w of the conjugate-index window [-w, w]
        used when factoring group ring elements into skew Laurent form.
    RELMOD_JOBS: Worker threads used by ``relmod verify``.

A ``.env`` file in the working directory is honoured when python-dotenv is
installed.
"""

from __future__ import annotations

import logging
import os
from functools import lru_cache

from pydantic import BaseModel, Field, field_validator

try:
    from dotenv import load_dotenv
except ImportError:  # pragma: no cover
    load_dotenv = None

logger = logging.getLogger(__name__)

DEFAULT_VERTEX_BUDGET = 1_000_000
DEFAULT_SKEW_WINDOW = 64
VALID_LOG_LEVELS = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}


class Settings(BaseModel):
    """Toolkit-wide defaults; every consumer also accepts explicit overrides."""

    log_level: str = "WARNING"
    vertex_budget: int = Field(default=DEFAULT_VERTEX_BUDGET, gt=0)
    skew_window: int = Field(default=DEFAULT_SKEW_WINDOW, ge=0)
    jobs: int = Field(default=1, gt=0)

    model_config = {"frozen": True}

    @field_validator("log_level")
    @classmethod
    def _check_level(cls, value: str) -> str:
        value = value.strip().upper()
        if value not in VALID_LOG_LEVELS:
            raise ValueError(f"log_level must be one of {sorted(VALID_LOG_LEVELS)}")
        return value

    @classmethod
    def from_env(cls) -> Settings:
        """Build settings from RELMOD_* environment variables."""
        if load_dotenv is not None:
            load_dotenv()
        values: dict[str, str] = {}
        for field_name in cls.model_fields:
            raw = os.getenv(f"RELMOD_{field_name.upper()}")
            if raw is not None and raw.strip():
                values[field_name] = raw.strip()
        settings = cls.model_validate(values)
        logger.debug("Loaded settings %s", settings.model_dump())
        return settings


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Return the process-wide settings (read once)."""
    return Settings.from_env()
