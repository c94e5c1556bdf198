from __future__ import annotations

from abc import ABC, abstractmethod
from datetime import datetime


class Clock(ABC):
    """Port for wall-clock readings.

    Contract:
    - now() MUST return a datetime with tzinfo=datetime.UTC
    - readings only feed printed reports, never result artifacts
    """

    @abstractmethod
    def now(self) -> datetime:
        """Return the current UTC datetime (tzinfo=datetime.UTC)."""
        ...
