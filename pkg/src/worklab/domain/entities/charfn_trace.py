from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numpy.typing import NDArray

from worklab.domain.exceptions import AliasingError, DimensionMismatchError
from worklab.domain.frozen_array import freeze_array


@dataclass(frozen=True, slots=True, eq=False)
class CharFnTrace:
    """
    Sampled characteristic function G(s_k) over one period [0, 2 pi).

    d_min and d_max declare the integer work support the trace encodes;
    inversion needs at least d_max - d_min + 1 uniform samples.
    """

    s_samples: NDArray[np.float64] = field(repr=False)
    values: NDArray[np.complex128] = field(repr=False)
    d_min: int
    d_max: int

    def __post_init__(self) -> None:
        s = freeze_array(self.s_samples, np.float64, "s samples")
        values = freeze_array(self.values, np.complex128, "trace values")
        if s.ndim != 1 or values.shape != s.shape:
            raise DimensionMismatchError(
                f"trace needs one value per sample, got {values.shape} vs {s.shape}"
            )
        if s.size and (s[0] < 0 or s[-1] >= 2 * np.pi or np.any(np.diff(s) <= 0)):
            raise AliasingError("s samples must increase strictly within [0, 2pi)")
        if self.d_min > self.d_max:
            raise DimensionMismatchError(
                f"empty work support [{self.d_min}, {self.d_max}]"
            )
        object.__setattr__(self, "s_samples", s)
        object.__setattr__(self, "values", values)

    @property
    def span(self) -> int:
        """Number of integer work values in the declared support."""
        return self.d_max - self.d_min + 1

    def __len__(self) -> int:
        return int(self.s_samples.size)

    def to_rows(self) -> list[tuple[float, float, float]]:
        """CSV rows (s, re_G, im_G)."""
        return [
            (float(s), float(g.real), float(g.imag))
            for s, g in zip(self.s_samples, self.values, strict=True)
        ]
