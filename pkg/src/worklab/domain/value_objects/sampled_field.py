from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, field
from typing import Any

import numpy as np
from numpy.typing import ArrayLike, NDArray

from worklab.domain.exceptions import GridMismatchError, InvalidGridError
from worklab.domain.frozen_array import freeze_array
from worklab.domain.value_objects.grid_spec import GridSpec


@dataclass(frozen=True, slots=True, eq=False)
class SampledField:
    """
    Complex transverse amplitude on a GridSpec.

    Values are stored as a read-only complex128 copy. Equality is identity
    based; compare fields numerically with overlap or l2 distance.
    """

    grid: GridSpec
    values: NDArray[np.complex128] = field(repr=False)

    def __post_init__(self) -> None:
        try:
            values = freeze_array(self.values, np.complex128, "field values")
        except ValueError as exc:
            raise InvalidGridError(str(exc)) from exc
        if values.shape != (self.grid.n_points,):
            raise InvalidGridError(
                f"field needs {self.grid.n_points} samples, got shape {values.shape}"
            )
        object.__setattr__(self, "values", values)

    @property
    def power(self) -> float:
        """Detected power sum |v_j|^2 dx (squared L2 norm)."""
        return float(np.sum(np.abs(self.values) ** 2) * self.grid.dx)

    @property
    def norm(self) -> float:
        return float(np.sqrt(self.power))

    def with_values(self, values: ArrayLike) -> SampledField:
        """Return a field on the same grid with new samples."""
        return SampledField(grid=self.grid, values=np.asarray(values))

    def scaled(self, factor: complex) -> SampledField:
        return self.with_values(self.values * factor)

    def to_rows(self) -> Iterator[tuple[float, float, float]]:
        """CSV rows (x, re, im) in grid order."""
        for x, v in zip(self.grid.x, self.values, strict=True):
            yield float(x), float(v.real), float(v.imag)

    def require_grid(self, other: SampledField | GridSpec) -> None:
        """Raise GridMismatchError unless other lives on the same grid."""
        grid = other if isinstance(other, GridSpec) else other.grid
        if grid != self.grid:
            raise GridMismatchError(f"grid mismatch: {self.grid} vs {grid}")

    @classmethod
    def from_function(cls, grid: GridSpec, values: Any) -> SampledField:
        """Sample a callable (or broadcastable array) on the grid coordinates."""
        samples = values(grid.x) if callable(values) else values
        return cls(grid=grid, values=np.broadcast_to(samples, (grid.n_points,)))
