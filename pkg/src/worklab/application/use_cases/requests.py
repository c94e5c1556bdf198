"""
Request DTOs for use cases.

All request DTOs are immutable frozen dataclasses that represent
the input data for use case operations. Values arrive already validated
by the entrypoint DTOs; the checks here guard direct library use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

from worklab.domain.exceptions import InvalidScenarioError
from worklab.domain.value_objects import DEFAULT_N_MAX, ChannelRecipe, GridSpec

MAX_Q0 = 10.0
MIN_S_SAMPLES = 3
DEFAULT_FRFT_ORDERS = (math.pi / 6, math.pi / 4, math.pi / 2, 3 * math.pi / 4)


class ComputeMode(str, Enum):
    """How the characteristic function is obtained."""

    ANALYTIC = "analytic"
    INTERFEROMETRIC = "interferometric"
    OPEN = "open"

    def __str__(self) -> str:
        """Return string value for display."""
        return self.value


class FinalHamiltonian(str, Enum):
    """Second-measurement Hamiltonian for open-dynamics runs."""

    INITIAL = "initial"
    DISPLACED = "displaced"

    def __str__(self) -> str:
        """Return string value for display."""
        return self.value


class VerifySuite(str, Enum):
    FAST = "fast"
    FULL = "full"
    STRESS = "stress"

    def __str__(self) -> str:
        """Return string value for display."""
        return self.value


# =============================================================================
# Scenario Requests
# =============================================================================


@dataclass(frozen=True, slots=True)
class ScenarioRequest:
    """
    One displacement-quench scenario.

    s_samples=None picks the smallest uniform grid that resolves the work
    support. channel is only read in open mode; without it the unitary
    displacement channel at open_dim is used.

    n_max is the mode ceiling: closed runs whose thermal cutoff lies above
    it are rejected before any amplitude is computed.
    """

    q0: float
    beta_hw: float
    s_samples: int | None = None
    mode: ComputeMode = ComputeMode.ANALYTIC
    tail_tol: float = 1e-8
    unitarity_tol: float = 1e-12
    grid: GridSpec | None = None
    channel: ChannelRecipe | None = None
    open_dim: int = 64
    final_hamiltonian: FinalHamiltonian = FinalHamiltonian.INITIAL
    workdist_floor: float = 1e-12
    workers: int = 1
    n_max: int = DEFAULT_N_MAX

    def __post_init__(self) -> None:
        if not math.isfinite(self.q0) or not 0.0 <= self.q0 <= MAX_Q0:
            raise InvalidScenarioError(f"q0 must lie in [0, {MAX_Q0}], got {self.q0}")
        if not math.isfinite(self.beta_hw) or self.beta_hw <= 0:
            raise InvalidScenarioError(f"beta_hw must be positive, got {self.beta_hw}")
        if not 0.0 < self.tail_tol < 1.0:
            raise InvalidScenarioError(f"tail_tol must lie in (0, 1), got {self.tail_tol}")
        if self.s_samples is not None and self.s_samples < MIN_S_SAMPLES:
            raise InvalidScenarioError(
                f"s_samples must be at least {MIN_S_SAMPLES}, got {self.s_samples}"
            )
        if self.open_dim < 2:
            raise InvalidScenarioError(f"open_dim must be at least 2, got {self.open_dim}")
        if self.workers < 1:
            raise InvalidScenarioError(f"workers must be at least 1, got {self.workers}")
        if not 1 <= self.n_max <= DEFAULT_N_MAX:
            raise InvalidScenarioError(
                f"n_max must lie in [1, {DEFAULT_N_MAX}], got {self.n_max}"
            )


# =============================================================================
# Optics Requests
# =============================================================================


@dataclass(frozen=True, slots=True)
class FrftVerifyRequest:
    """Compare optical and spectral FRFT for modes 0..n_max at each order."""

    n_max: int = 10
    orders: tuple[float, ...] = DEFAULT_FRFT_ORDERS
    grid: GridSpec = field(default_factory=lambda: GridSpec(n_points=2048, half_width=30.0))
    workers: int = 1
    mode_ceiling: int = DEFAULT_N_MAX

    def __post_init__(self) -> None:
        if self.n_max < 0:
            raise InvalidScenarioError(f"n_max must be non-negative, got {self.n_max}")
        if self.n_max > self.mode_ceiling:
            raise InvalidScenarioError(
                f"n_max {self.n_max} exceeds the mode ceiling {self.mode_ceiling}"
            )
        if not self.orders:
            raise InvalidScenarioError("at least one FRFT order is required")


@dataclass(frozen=True, slots=True)
class UnitsRequest:
    """Lens-chain geometry in laboratory units."""

    lambda_nm: float
    f_mm: float
    alpha: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.lambda_nm) and self.lambda_nm > 0):
            raise InvalidScenarioError(f"lambda_nm must be positive, got {self.lambda_nm}")
        if not (math.isfinite(self.f_mm) and self.f_mm > 0):
            raise InvalidScenarioError(f"f_mm must be positive, got {self.f_mm}")
        if not (math.isfinite(self.alpha) and 0.0 < self.alpha < 2 * math.pi):
            raise InvalidScenarioError(f"alpha must lie in (0, 2pi), got {self.alpha}")


@dataclass(frozen=True, slots=True)
class VerifyRequest:
    suite: VerifySuite = VerifySuite.FAST
    workers: int = 1
