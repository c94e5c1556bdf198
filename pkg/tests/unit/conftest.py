"""Fixtures shared by all unit tests."""

from __future__ import annotations

from collections.abc import Iterator

import pytest
import structlog

from worklab.config import reset_settings


@pytest.fixture(autouse=True)
def isolated_globals() -> Iterator[None]:
    """Restore the structlog configuration and drop cached settings after each test."""
    reset_settings()
    yield
    structlog.reset_defaults()
    reset_settings()
