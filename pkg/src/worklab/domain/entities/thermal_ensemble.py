from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from numpy.typing import NDArray

from worklab.domain.exceptions import DegenerateTemperatureError, DimensionMismatchError
from worklab.domain.frozen_array import freeze_array


@dataclass(frozen=True, slots=True, eq=False)
class ThermalEnsemble:
    """
    Gibbs state of the oscillator truncated at n_cut.

    Weights are renormalized over the kept levels; renormalization records
    the kept probability mass before renormalizing.
    """

    beta_hw: float
    weights: NDArray[np.float64] = field(repr=False)
    n_cut: int
    log_partition: float
    renormalization: float
    tail_tol: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.beta_hw) or self.beta_hw <= 0:
            raise DegenerateTemperatureError(
                f"beta_hw must be positive, got {self.beta_hw}"
            )
        weights = freeze_array(self.weights, np.float64, "weights")
        if weights.shape != (self.n_cut + 1,):
            raise DimensionMismatchError(
                f"expected {self.n_cut + 1} weights, got shape {weights.shape}"
            )
        if np.any(weights <= 0):
            raise DegenerateTemperatureError("thermal weights must be positive")
        object.__setattr__(self, "weights", weights)

    @property
    def levels(self) -> int:
        """Number of kept levels (n_cut + 1)."""
        return self.n_cut + 1

    @property
    def ground_state_only(self) -> bool:
        return self.n_cut == 0
