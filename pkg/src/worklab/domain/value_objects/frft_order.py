from __future__ import annotations

import math
from dataclasses import dataclass

from worklab.domain.exceptions import InvalidElementError

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True, slots=True)
class FrftOrder:
    """Fractional Fourier order alpha in the closed interval [0, 2 pi]."""

    alpha: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.alpha) or not 0.0 <= self.alpha <= TWO_PI:
            raise InvalidElementError(f"alpha must lie in [0, 2pi], got {self.alpha}")

    @property
    def is_interior(self) -> bool:
        """True for 0 < alpha < 2 pi (the lens-chain domain)."""
        return 0.0 < self.alpha < TWO_PI

    @classmethod
    def wrapped(cls, alpha: float) -> FrftOrder:
        """Order alpha mod 2 pi, mapping exact multiples of 2 pi to 0."""
        return cls(alpha=math.fmod(alpha, TWO_PI) % TWO_PI)
