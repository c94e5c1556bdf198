from __future__ import annotations

import math
from dataclasses import dataclass

from worklab.domain.entities.transition_matrix import TransitionMatrix
from worklab.domain.exceptions import (
    GridMismatchError,
    InvalidInterferometerConfigError,
)
from worklab.domain.value_objects import (
    FinalBasis,
    GridSpec,
    PhaseMask,
    Provenance,
)

REAL_PART = 0.0
IMAGINARY_PART = math.pi / 2


@dataclass(frozen=True, slots=True, eq=False)
class InterferometerConfig:
    """
    Two-path interferometer with fixed 50:50 splitters.

    The process is either a pointwise phase mask or a transition matrix
    applied in mode space and resynthesized in the final basis. phase_offset
    is the PZT setting (0 reads Re G, pi/2 reads Im G). n_basis is the mode
    count used by the spectral free evolution; it defaults to m_max for
    matrix processes and must be given for masks.
    """

    process: PhaseMask | TransitionMatrix
    phase_offset: float = REAL_PART
    final_basis: FinalBasis = FinalBasis()
    grid: GridSpec | None = None
    n_basis: int | None = None

    def __post_init__(self) -> None:
        if not math.isfinite(self.phase_offset):
            raise InvalidInterferometerConfigError("phase offset must be finite")
        if isinstance(self.process, PhaseMask):
            self._validate_mask_process(self.process)
        else:
            self._validate_matrix_process(self.process)

    def _validate_mask_process(self, mask: PhaseMask) -> None:
        if self.final_basis.is_displaced:
            raise InvalidInterferometerConfigError(
                "phase-mask processes have no known final Hamiltonian; "
                "use SameAsInitial"
            )
        if self.n_basis is None:
            raise InvalidInterferometerConfigError("phase-mask processes need n_basis")
        if self.grid is not None and self.grid != mask.grid:
            raise GridMismatchError("configured grid differs from the mask grid")

    def _validate_matrix_process(self, matrix: TransitionMatrix) -> None:
        if not self.final_basis.is_displaced:
            return
        if matrix.provenance is Provenance.GRID_PROCESS or matrix.q0 is None:
            raise InvalidInterferometerConfigError(
                "grid processes cannot be paired with a displaced final basis"
            )
        if matrix.q0 != self.final_basis.q0:
            raise InvalidInterferometerConfigError(
                f"final basis kick {self.final_basis.q0} differs from process "
                f"kick {matrix.q0}"
            )

    @property
    def kick(self) -> float:
        """q0 of the final basis (0 for SameAsInitial)."""
        return self.final_basis.q0

    @property
    def resolved_grid(self) -> GridSpec:
        if isinstance(self.process, PhaseMask):
            return self.process.grid
        if self.grid is not None:
            return self.grid
        return GridSpec.covering(self.resolved_n_basis, self.kick)

    @property
    def resolved_n_basis(self) -> int:
        if self.n_basis is not None:
            return self.n_basis
        assert isinstance(self.process, TransitionMatrix)
        return self.process.m_max

    def with_phase_offset(self, theta: float) -> InterferometerConfig:
        return InterferometerConfig(
            process=self.process,
            phase_offset=theta,
            final_basis=self.final_basis,
            grid=self.grid,
            n_basis=self.n_basis,
        )
