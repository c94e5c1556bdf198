"""Application configuration using pydantic-settings.

This module centralizes all environment variable access. Configuration is
an infrastructure concern and should only be used in:
- Entrypoints layer (CLI composition)
- Infrastructure layer (logging setup)

Domain and Application layers must NOT import this module directly; they
receive plain values from the entrypoints.
"""

from __future__ import annotations

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from worklab.domain.value_objects import DEFAULT_N_MAX


class Settings(BaseSettings):
    """Laboratory settings loaded from ``WORKLAB_*`` environment variables.

    Attributes:
        threads: Worker cap for per-mode and per-sample loops (default: 1).
        debug: Console logs at DEBUG level instead of JSON at INFO.
        n_max: Ceiling on any mode index, at most 256 (default: 256).
        tail_tol: Thermal tail mass left out of an ensemble (default: 1e-8).
        unitarity_tol: Column deficit tolerance for transition matrices.
        open_dim: Truncation dimension of open-dynamics operators.
        workdist_floor: Edge probabilities at or below this are trimmed
            from exported work distributions.
        out_dir: Default output directory for CSV artifacts.
    """

    model_config = SettingsConfigDict(
        env_prefix="WORKLAB_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    threads: int = Field(default=1, ge=1)
    debug: bool = False

    # Numerics
    n_max: int = Field(default=DEFAULT_N_MAX, ge=1, le=DEFAULT_N_MAX)
    tail_tol: float = Field(default=1e-8, gt=0.0, lt=1.0)
    unitarity_tol: float = Field(default=1e-12, gt=0.0, lt=1.0)
    open_dim: int = Field(default=64, ge=2)
    workdist_floor: float = Field(default=1e-12, ge=0.0)

    # Output
    out_dir: str = "results"


_settings: Settings | None = None


def get_settings() -> Settings:
    """Get laboratory settings (lazy singleton).

    Settings are instantiated on first access, not at module import time,
    so tests can adjust the environment before the first read.
    """
    global _settings
    if _settings is None:
        _settings = Settings()
    return _settings


def reset_settings() -> None:
    """Drop the cached settings so the next access re-reads the environment."""
    global _settings
    _settings = None
