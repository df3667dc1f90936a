import os
import logging
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError

from .exceptions import ConfigurationError

logger = logging.getLogger(__name__)

_ENV_PREFIX = 'LATTICESCHEME_'
_dotenv_loaded = False


class Settings(BaseModel):
    log_level: str = Field("WARNING", description="Root log level for the CLI")
    eigen_tolerance: float = Field(1e-6, gt=0, description="Max component gap for identifying eigenvalue rows")
    closed_subset_cap: int = Field(20, ge=1, description="Largest class count closed_subsets accepts")
    render_norm_cap: int = Field(10_000, ge=2, description="Largest norm render_svg accepts")
    sweep_norm_cap: int = Field(500, ge=2, description="Largest norm bound a sweep accepts")
    sweep_workers: int = Field(1, ge=1, description="Worker processes used by sweeps")
    metrics_file: Optional[str] = Field(None, description="Prometheus textfile written after each CLI run")


def _load_env_once():
    global _dotenv_loaded
    if not _dotenv_loaded:
        # .env values never override the real environment
        load_dotenv(override=False)
        _dotenv_loaded = True


def get_settings() -> Settings:
    """Get settings from environment (LATTICESCHEME_* variables, optionally from .env)"""
    _load_env_once()

    raw = {}
    for name in Settings.model_fields:
        value = os.getenv(_ENV_PREFIX + name.upper())
        if value is not None and value != '':
            raw[name] = value

    try:
        return Settings(**raw)
    except ValidationError as e:
        logger.error(f"Invalid configuration: {e}")
        raise ConfigurationError(f"Invalid {_ENV_PREFIX}* configuration: {e}") from e
