from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numpy.typing import NDArray

from worklab.domain.exceptions import DimensionMismatchError, NegativeProbabilityError
from worklab.domain.frozen_array import freeze_array

NEGATIVE_FLOOR = -1e-12


@dataclass(frozen=True, slots=True, eq=False)
class WorkDist:
    """
    Discrete work distribution P(zeta) on consecutive integers
    zeta = d_min, d_min + 1, ... (work in units of hbar*omega).

    Entries in [-1e-12, 0) are clamped to 0 at construction.
    """

    d_min: int
    probs: NDArray[np.float64] = field(repr=False)

    def __post_init__(self) -> None:
        probs = np.array(freeze_array(self.probs, np.float64, "probabilities"))
        if probs.ndim != 1 or probs.size == 0:
            raise DimensionMismatchError("work distribution needs a 1-D support")
        lowest = float(probs.min())
        if lowest < NEGATIVE_FLOOR:
            raise NegativeProbabilityError(
                f"probability {lowest:.3e} below floor {NEGATIVE_FLOOR}"
            )
        probs[probs < 0] = 0.0
        probs.setflags(write=False)
        object.__setattr__(self, "probs", probs)

    @property
    def d_max(self) -> int:
        return self.d_min + int(self.probs.size) - 1

    @property
    def support(self) -> NDArray[np.int64]:
        return np.arange(self.d_min, self.d_max + 1, dtype=np.int64)

    @property
    def total(self) -> float:
        return float(self.probs.sum())

    def prob(self, d: int) -> float:
        """P(d), zero outside the support."""
        if d < self.d_min or d > self.d_max:
            return 0.0
        return float(self.probs[d - self.d_min])

    def trimmed(self, floor: float) -> WorkDist:
        """Drop leading and trailing entries at or below floor."""
        kept = np.nonzero(self.probs > floor)[0]
        if kept.size == 0:
            return self
        lo, hi = int(kept[0]), int(kept[-1])
        return WorkDist(d_min=self.d_min + lo, probs=self.probs[lo : hi + 1])

    def to_rows(self) -> list[tuple[int, float]]:
        """CSV rows (zeta, prob)."""
        return [
            (int(d), float(p)) for d, p in zip(self.support, self.probs, strict=True)
        ]
