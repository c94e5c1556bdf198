"""Operators and states on a truncated eigenbasis of the initial Hamiltonian."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np
from numpy.typing import ArrayLike, NDArray

from worklab.domain.exceptions import (
    CompletenessViolationError,
    DimensionMismatchError,
    InvalidDensityMatrixError,
    InvalidOperatorError,
)
from worklab.domain.frozen_array import freeze_array

HERMITIAN_TOL = 1e-10
TRACE_TOL = 1e-10
POSITIVITY_TOL = 1e-10
COMPLETENESS_TOL = 1e-8


def _square(entries: ArrayLike, name: str) -> NDArray[np.complex128]:
    try:
        matrix = freeze_array(entries, np.complex128, name)
    except ValueError as exc:
        raise InvalidOperatorError(str(exc)) from exc
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or matrix.shape[0] < 1:
        raise InvalidOperatorError(f"{name} must be square, got shape {matrix.shape}")
    return matrix


@dataclass(frozen=True, slots=True, eq=False)
class TruncatedOperator:
    """D x D operator in the initial-Hamiltonian eigenbasis."""

    entries: NDArray[np.complex128] = field(repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", _square(self.entries, "operator"))

    @property
    def dim(self) -> int:
        return int(self.entries.shape[0])

    @property
    def adjoint(self) -> TruncatedOperator:
        return TruncatedOperator(self.entries.conj().T)

    def is_hermitian(self, tol: float = HERMITIAN_TOL) -> bool:
        return bool(np.max(np.abs(self.entries - self.entries.conj().T)) <= tol)

    def require_dim(self, dim: int) -> None:
        if self.dim != dim:
            raise DimensionMismatchError(f"expected dimension {dim}, got {self.dim}")

    @classmethod
    def identity(cls, dim: int) -> TruncatedOperator:
        return cls(np.eye(dim, dtype=np.complex128))

    @classmethod
    def diagonal(cls, values: ArrayLike) -> TruncatedOperator:
        return cls(np.diag(np.asarray(values, dtype=np.complex128)))


@dataclass(frozen=True, slots=True, eq=False)
class DensityMatrix:
    """Hermitian, unit-trace, positive semidefinite state."""

    entries: NDArray[np.complex128] = field(repr=False)

    def __post_init__(self) -> None:
        matrix = _square(self.entries, "density matrix")
        if np.max(np.abs(matrix - matrix.conj().T)) > HERMITIAN_TOL:
            raise InvalidDensityMatrixError("density matrix must be Hermitian")
        trace = complex(np.trace(matrix))
        if abs(trace - 1.0) > TRACE_TOL:
            raise InvalidDensityMatrixError(f"density matrix trace must be 1, got {trace}")
        lowest = float(np.linalg.eigvalsh(matrix).min())
        if lowest < -POSITIVITY_TOL:
            raise InvalidDensityMatrixError(
                f"density matrix has negative eigenvalue {lowest:.3e}"
            )
        object.__setattr__(self, "entries", matrix)

    @property
    def dim(self) -> int:
        return int(self.entries.shape[0])

    @property
    def populations(self) -> NDArray[np.float64]:
        """Diagonal in the truncated eigenbasis."""
        return np.real(np.diag(self.entries)).copy()

    @classmethod
    def pure(cls, vector: ArrayLike) -> DensityMatrix:
        psi = np.asarray(vector, dtype=np.complex128)
        return cls(np.outer(psi, psi.conj()))

    @classmethod
    def basis_state(cls, n: int, dim: int) -> DensityMatrix:
        psi = np.zeros(dim, dtype=np.complex128)
        psi[n] = 1.0
        return cls.pure(psi)


@dataclass(frozen=True, slots=True, eq=False)
class KrausChannel:
    """
    CPTP map rho -> sum_m G_m rho G_m^dagger.

    completeness_defect = ||sum_m G_m^dagger G_m - 1|| (spectral norm) is
    computed at construction and must stay below 1e-8.
    """

    operators: tuple[TruncatedOperator, ...]
    completeness_defect: float = field(init=False)

    def __post_init__(self) -> None:
        if not self.operators:
            raise InvalidOperatorError("channel needs at least one Kraus operator")
        dim = self.operators[0].dim
        for op in self.operators:
            op.require_dim(dim)
        stack = self.stack
        gram = np.einsum("kab,kac->bc", stack.conj(), stack)
        defect = float(np.linalg.norm(gram - np.eye(dim), ord=2))
        if defect > COMPLETENESS_TOL:
            raise CompletenessViolationError(
                f"Kraus completeness defect {defect:.3e} exceeds {COMPLETENESS_TOL}"
            )
        object.__setattr__(self, "completeness_defect", defect)

    @property
    def dim(self) -> int:
        return self.operators[0].dim

    @property
    def stack(self) -> NDArray[np.complex128]:
        """Kraus operators as a (K, D, D) array."""
        return np.stack([op.entries for op in self.operators])

    @classmethod
    def from_matrices(cls, matrices: Sequence[ArrayLike]) -> KrausChannel:
        return cls(tuple(TruncatedOperator(np.asarray(m)) for m in matrices))

    @classmethod
    def unitary(cls, u: TruncatedOperator) -> KrausChannel:
        return cls((u,))

    @classmethod
    def identity(cls, dim: int) -> KrausChannel:
        return cls((TruncatedOperator.identity(dim),))
