"""Optical elements of the paraxial engine (dimensionless units, k = 1)."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from worklab.domain.exceptions import (
    InvalidElementError,
    NonUnitaryMaskError,
    ZeroFocalLengthError,
)
from worklab.domain.value_objects.grid_spec import GridSpec
from worklab.domain.value_objects.sampled_field import SampledField

UNIT_MODULUS_TOL = 1e-9


@dataclass(frozen=True, slots=True)
class FreeSpace:
    """Free paraxial propagation over a length z >= 0."""

    z: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.z) or self.z < 0:
            raise InvalidElementError(
                f"propagation length must be >= 0 and finite, got {self.z}"
            )


@dataclass(frozen=True, slots=True)
class ThinLens:
    """Thin lens of focal length f; f = inf is the flag value for no lens."""

    f: float

    def __post_init__(self) -> None:
        if math.isnan(self.f):
            raise InvalidElementError("focal length must not be NaN")
        if self.f == 0:
            raise ZeroFocalLengthError("focal length must be non-zero")

    @property
    def is_identity(self) -> bool:
        return math.isinf(self.f)


@dataclass(frozen=True, slots=True)
class PhaseMask:
    """Pointwise pure-phase modulation U(x) = e^{i theta(x)}."""

    profile: SampledField

    def __post_init__(self) -> None:
        deviation = float(np.max(np.abs(np.abs(self.profile.values) - 1.0)))
        if deviation > UNIT_MODULUS_TOL:
            raise NonUnitaryMaskError(
                f"phase mask samples must have unit modulus (max deviation {deviation:.3e})"
            )

    @property
    def grid(self) -> GridSpec:
        return self.profile.grid

    @classmethod
    def kick(cls, grid: GridSpec, q0: float) -> PhaseMask:
        """Momentum kick e^{-i q0 x}: the prism that implements D(p0)."""
        return cls(SampledField.from_function(grid, lambda x: np.exp(-1j * q0 * x)))

    @classmethod
    def constant(cls, grid: GridSpec, phase: float) -> PhaseMask:
        return cls(SampledField.from_function(grid, np.exp(1j * phase)))


@dataclass(frozen=True, slots=True)
class IndexChannel:
    """
    Graded-index channel: relative index modulation dn(x)/n0 over a length,
    integrated in a fixed number of split steps.
    """

    delta_n_over_n0: SampledField
    length: float
    steps: int

    def __post_init__(self) -> None:
        if float(np.max(np.abs(self.delta_n_over_n0.values.imag))) > 0:
            raise InvalidElementError("index modulation must be real")
        if not math.isfinite(self.length) or self.length < 0:
            raise InvalidElementError(
                f"channel length must be >= 0 and finite, got {self.length}"
            )
        if isinstance(self.steps, bool) or not isinstance(self.steps, int):
            raise InvalidElementError("steps must be int")
        if self.steps < 1:
            raise InvalidElementError(f"steps must be >= 1, got {self.steps}")

    @property
    def grid(self) -> GridSpec:
        return self.delta_n_over_n0.grid

    @property
    def dz(self) -> float:
        return self.length / self.steps

    @classmethod
    def harmonic(cls, grid: GridSpec, length: float, steps: int) -> IndexChannel:
        """Parabolic channel dn/n0 = x^2/2, the optical harmonic potential."""
        return cls(SampledField.from_function(grid, lambda x: 0.5 * x**2), length, steps)

    @classmethod
    def empty(cls, grid: GridSpec, length: float, steps: int) -> IndexChannel:
        return cls(SampledField.from_function(grid, 0.0), length, steps)


OpticalElement = FreeSpace | ThinLens | PhaseMask | IndexChannel
