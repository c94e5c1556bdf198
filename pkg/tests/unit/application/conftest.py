"""Shared fixtures for application tests."""

from __future__ import annotations

from datetime import UTC, datetime, timedelta

import pytest

from worklab.infrastructure.adapters import FixedClock, InMemoryResultSink


@pytest.fixture
def sink() -> InMemoryResultSink:
    """Provide a fresh in-memory result sink for each test."""
    return InMemoryResultSink()


@pytest.fixture
def clock() -> FixedClock:
    """Provide a clock that advances two seconds per reading."""
    return FixedClock(datetime(2024, 1, 15, 12, 0, 0, tzinfo=UTC), step=timedelta(seconds=2))
