from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from numpy.typing import NDArray

from worklab.domain.exceptions import DegenerateTemperatureError, InvalidElementError


class SpectrumKind(str, Enum):
    """Supported level structures."""

    HARMONIC_OSCILLATOR = "harmonic_oscillator"

    def __str__(self) -> str:
        """Return string value for display."""
        return self.value


@dataclass(frozen=True, slots=True)
class Spectrum:
    """
    Energy levels in units of the reference quantum hbar*omega.

    level(n) = scale * (n + 1/2); scale is the frequency ratio to the
    reference oscillator (1 for the displacement quench).
    """

    kind: SpectrumKind = SpectrumKind.HARMONIC_OSCILLATOR
    scale: float = 1.0

    def __post_init__(self) -> None:
        if not math.isfinite(self.scale) or self.scale <= 0:
            raise InvalidElementError(
                f"spectrum scale must be positive and finite, got {self.scale}"
            )

    def level(self, n: int) -> float:
        return self.scale * (n + 0.5)

    def levels(self, count: int) -> NDArray[np.float64]:
        return self.scale * (np.arange(count, dtype=np.float64) + 0.5)

    def log_partition(self, beta_hw: float) -> float:
        """Untruncated log Z = -b/2 - log(1 - e^{-b}) with b = beta_hw * scale."""
        if beta_hw <= 0:
            raise DegenerateTemperatureError(
                f"beta_hw must be positive, got {beta_hw}"
            )
        b = beta_hw * self.scale
        return -0.5 * b - math.log(-math.expm1(-b))

    @classmethod
    def harmonic(cls, scale: float = 1.0) -> Spectrum:
        return cls(kind=SpectrumKind.HARMONIC_OSCILLATOR, scale=scale)
