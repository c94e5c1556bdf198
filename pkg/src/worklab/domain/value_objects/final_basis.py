from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from worklab.domain.exceptions import InvalidInterferometerConfigError


class FinalBasisKind(str, Enum):
    """Eigenbasis of the Hamiltonian generating the lower-path free evolution."""

    SAME_AS_INITIAL = "same_as_initial"
    DISPLACED_BY = "displaced_by"

    def __str__(self) -> str:
        """Return string value for display."""
        return self.value


@dataclass(frozen=True, slots=True)
class FinalBasis:
    """
    Final-Hamiltonian eigenbasis: the initial modes, or the displaced modes
    D^dagger(p0) phi_m = e^{+i q0 x} phi_m.
    """

    kind: FinalBasisKind = FinalBasisKind.SAME_AS_INITIAL
    q0: float = 0.0

    def __post_init__(self) -> None:
        if not math.isfinite(self.q0):
            raise InvalidInterferometerConfigError("final basis kick must be finite")
        if self.kind is FinalBasisKind.SAME_AS_INITIAL and self.q0 != 0.0:
            raise InvalidInterferometerConfigError(
                "SameAsInitial final basis does not take a kick"
            )

    @property
    def is_displaced(self) -> bool:
        return self.kind is FinalBasisKind.DISPLACED_BY

    @classmethod
    def same_as_initial(cls) -> FinalBasis:
        return cls()

    @classmethod
    def displaced_by(cls, q0: float) -> FinalBasis:
        return cls(kind=FinalBasisKind.DISPLACED_BY, q0=q0)
