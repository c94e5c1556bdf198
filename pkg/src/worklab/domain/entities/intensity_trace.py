from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numpy.typing import NDArray

from worklab.domain.exceptions import DimensionMismatchError, NegativeProbabilityError
from worklab.domain.frozen_array import freeze_array

INTENSITY_FLOOR = -1e-12


@dataclass(frozen=True, slots=True, eq=False)
class IntensityTrace:
    """
    Bulk-detector readings of both interferometer outputs versus s.

    out0 is the "+" superposition port. offset is the incoherent 2A term,
    interference_scale the amplitude multiplying Re/Im G, input_power the
    (Boltzmann-weighted) power entering the first splitter.
    """

    s_samples: NDArray[np.float64] = field(repr=False)
    intensity_out0: NDArray[np.float64] = field(repr=False)
    intensity_out1: NDArray[np.float64] = field(repr=False)
    offset: float
    theta: float
    interference_scale: float
    input_power: float
    d_min: int
    d_max: int

    def __post_init__(self) -> None:
        s = freeze_array(self.s_samples, np.float64, "s samples")
        out0 = freeze_array(self.intensity_out0, np.float64, "out0")
        out1 = freeze_array(self.intensity_out1, np.float64, "out1")
        if out0.shape != s.shape or out1.shape != s.shape:
            raise DimensionMismatchError("intensity arrays must match the s samples")
        lowest = min(float(out0.min(initial=0.0)), float(out1.min(initial=0.0)))
        if lowest < INTENSITY_FLOOR:
            raise NegativeProbabilityError(f"negative detected power {lowest:.3e}")
        object.__setattr__(self, "s_samples", s)
        object.__setattr__(self, "intensity_out0", out0)
        object.__setattr__(self, "intensity_out1", out1)

    @property
    def total_power(self) -> NDArray[np.float64]:
        """out0 + out1 per sample."""
        return self.intensity_out0 + self.intensity_out1

    def to_rows(self) -> list[tuple[float, float, float, float]]:
        """CSV rows (s, out0, out1, offset)."""
        return [
            (float(s), float(a), float(b), self.offset)
            for s, a, b in zip(
                self.s_samples, self.intensity_out0, self.intensity_out1, strict=True
            )
        ]
