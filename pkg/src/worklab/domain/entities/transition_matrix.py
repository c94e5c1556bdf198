from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, field

import numpy as np
from numpy.typing import NDArray

from worklab.domain.exceptions import DimensionMismatchError, InvalidOperatorError
from worklab.domain.frozen_array import freeze_array
from worklab.domain.value_objects import Provenance


@dataclass(frozen=True, slots=True, eq=False)
class TransitionMatrix:
    """
    Transition amplitudes c_{m,n} from initial mode n to final mode m.

    entries has shape (m_max + 1, n_max + 1). q0 is None for processes that
    are not a pure momentum kick (GridProcess).
    """

    q0: float | None
    entries: NDArray[np.complex128] = field(repr=False)
    provenance: Provenance

    def __post_init__(self) -> None:
        try:
            entries = freeze_array(self.entries, np.complex128, "transition entries")
        except ValueError as exc:
            raise InvalidOperatorError(str(exc)) from exc
        if entries.ndim != 2:
            raise InvalidOperatorError(
                f"transition entries must be 2-D, got shape {entries.shape}"
            )
        if entries.shape[0] < entries.shape[1]:
            raise DimensionMismatchError(
                f"m_max must be >= n_max, got shape {entries.shape}"
            )
        object.__setattr__(self, "entries", entries)

    @property
    def m_max(self) -> int:
        return self.entries.shape[0] - 1

    @property
    def n_max(self) -> int:
        return self.entries.shape[1] - 1

    @property
    def probabilities(self) -> NDArray[np.float64]:
        """|c_{m,n}|^2."""
        return np.abs(self.entries) ** 2

    @property
    def deficits(self) -> NDArray[np.float64]:
        """Per-column probability deficit 1 - sum_m |c_{m,n}|^2."""
        return 1.0 - self.probabilities.sum(axis=0)

    @property
    def max_deficit(self) -> float:
        return float(np.max(np.abs(self.deficits)))

    def covers(self, n_cut: int) -> bool:
        """True if every level up to n_cut has a column."""
        return self.n_max >= n_cut

    def to_rows(self) -> Iterator[tuple[int, int, float, float]]:
        """CSV rows (m, n, re, im) in column-major order."""
        for n in range(self.n_max + 1):
            for m in range(self.m_max + 1):
                c = self.entries[m, n]
                yield m, n, float(c.real), float(c.imag)
