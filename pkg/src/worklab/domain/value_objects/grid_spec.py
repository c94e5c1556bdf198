from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from worklab.domain.exceptions import InvalidGridError

MIN_POINTS = 64
DEFAULT_POINTS = 2048
MIN_HALF_WIDTH = 12.0
TURNING_POINT_SAFETY = 1.5


def turning_point(n: int) -> float:
    """Classical turning point sqrt(2n + 1) of oscillator level n."""
    return math.sqrt(2 * n + 1)


@dataclass(frozen=True, slots=True)
class GridSpec:
    """
    Uniform, symmetric 1-D transverse grid in oscillator units.

    Samples sit at half-integer offsets, x_j = -half_width + (j + 1/2) dx,
    so no sample lands on x = 0 and the grid mirrors exactly about it.
    """

    n_points: int
    half_width: float

    def __post_init__(self) -> None:
        if isinstance(self.n_points, bool) or not isinstance(self.n_points, int):
            raise InvalidGridError(
                f"n_points must be int, got {type(self.n_points).__name__}"
            )
        if self.n_points < MIN_POINTS or self.n_points % 2 != 0:
            raise InvalidGridError(
                f"n_points must be even and >= {MIN_POINTS}, got {self.n_points}"
            )
        if not math.isfinite(self.half_width) or self.half_width <= 0:
            raise InvalidGridError(
                f"half_width must be positive and finite, got {self.half_width}"
            )

    @property
    def dx(self) -> float:
        return 2.0 * self.half_width / self.n_points

    @property
    def x(self) -> NDArray[np.float64]:
        """Sample coordinates, built by mirroring the positive half."""
        positive = (np.arange(self.n_points // 2) + 0.5) * self.dx
        return np.concatenate((-positive[::-1], positive))

    @property
    def kx(self) -> NDArray[np.float64]:
        """Angular spatial frequencies in FFT order."""
        return 2.0 * np.pi * np.fft.fftfreq(self.n_points, d=self.dx)

    def guard_mask(self, fraction: float = 0.9) -> NDArray[np.bool_]:
        """Samples in the outer band |x| > fraction * half_width."""
        return np.abs(self.x) > fraction * self.half_width

    @classmethod
    def default(cls, n_max: int = 256) -> GridSpec:
        """Default grid: 2048 points, half-width max(12, 1.5 sqrt(2 n_max + 1))."""
        half_width = max(MIN_HALF_WIDTH, TURNING_POINT_SAFETY * turning_point(n_max))
        return cls(n_points=DEFAULT_POINTS, half_width=half_width)

    @classmethod
    def covering(cls, n_max: int, q0: float = 0.0) -> GridSpec:
        """
        Smallest power-of-two grid that holds modes up to n_max under a kick q0.

        The half-width covers the turning point of n_max with the usual
        safety factor; the spacing resolves both the fastest mode oscillation
        and the kick phase e^{-i q0 x} (dx |q0| < pi/4).
        """
        half_width = max(MIN_HALF_WIDTH, TURNING_POINT_SAFETY * turning_point(n_max))
        dx_max = math.pi / (2.0 * (turning_point(n_max) + 2.0 * abs(q0)))
        n_points = MIN_POINTS
        while 2.0 * half_width / n_points > dx_max:
            n_points *= 2
        return cls(n_points=n_points, half_width=half_width)
