from __future__ import annotations

from datetime import UTC, datetime, timedelta

from worklab.application.ports import Clock


class SystemClock(Clock):
    """Production clock using the system time."""

    def now(self) -> datetime:
        return datetime.now(UTC)


class FixedClock(Clock):
    """Test clock with a controllable fixed timestamp.

    Usage:
        clock = FixedClock(datetime(2024, 1, 1, tzinfo=UTC), step=timedelta(seconds=2))
        clock.now()  # 2024-01-01 00:00:00
        clock.now()  # 2024-01-01 00:00:02
    """

    def __init__(self, fixed_time: datetime, step: timedelta = timedelta(0)) -> None:
        if fixed_time.tzinfo is not UTC:
            raise ValueError(
                f"datetime must have tzinfo=UTC, got tzinfo={fixed_time.tzinfo}"
            )
        self._fixed_time = fixed_time
        self._step = step

    def now(self) -> datetime:
        current = self._fixed_time
        self._fixed_time = current + self._step
        return current
