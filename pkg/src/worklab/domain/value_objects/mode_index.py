from __future__ import annotations

from dataclasses import dataclass

from worklab.domain.exceptions import InvalidModeIndexError

DEFAULT_N_MAX = 256


@dataclass(frozen=True, slots=True)
class ModeIndex:
    """Oscillator level / Hermite-Gaussian mode order n, 0 <= n <= n_max."""

    n: int
    n_max: int = DEFAULT_N_MAX

    def __post_init__(self) -> None:
        if isinstance(self.n, bool) or not isinstance(self.n, int):
            raise InvalidModeIndexError(
                f"mode index must be int, got {type(self.n).__name__}"
            )
        if self.n < 0:
            raise InvalidModeIndexError(f"mode index must be >= 0, got {self.n}")
        if self.n > self.n_max:
            raise InvalidModeIndexError(
                f"mode index {self.n} exceeds configured n_max {self.n_max}"
            )

    def __int__(self) -> int:
        return self.n

    @classmethod
    def of(cls, n: ModeIndex | int, n_max: int = DEFAULT_N_MAX) -> ModeIndex:
        """Coerce an int (or pass through a ModeIndex) with validation."""
        if isinstance(n, ModeIndex):
            return n
        return cls(n=n, n_max=n_max)
