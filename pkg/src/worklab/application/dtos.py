from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from worklab.application.use_cases.requests import ComputeMode, VerifySuite
    from worklab.domain.entities import CharFnTrace, IntensityTrace, WorkDist


@dataclass(frozen=True, slots=True)
class CharfnResult:
    """Characteristic function of one scenario and its inverted distribution."""

    mode: ComputeMode
    trace: CharFnTrace
    dist: WorkDist
    artifacts: tuple[str, ...]

    # Open mode only: largest |G_D(s) - G_2D(s)| over the s grid
    doubling_drift: float | None = None


@dataclass(frozen=True, slots=True)
class WorkdistResult:
    mode: ComputeMode
    dist: WorkDist
    mean_work: float
    work_variance: float
    artifacts: tuple[str, ...]


@dataclass(frozen=True, slots=True)
class InterferometerResult:
    """Both PZT settings of a simulated run and what they reconstruct."""

    re_trace: IntensityTrace
    im_trace: IntensityTrace
    trace: CharFnTrace
    dist: WorkDist
    symmetry_defect: float
    artifacts: tuple[str, ...]


@dataclass(frozen=True, slots=True)
class FrftCheck:
    n: int
    alpha: float
    spectral_error: float  # |<phi_n|FRFT phi_n> - e^{-i alpha (n + 1/2)}|
    optical_error: float  # L2 distance to spectral after phase alignment


@dataclass(frozen=True, slots=True)
class FrftReport:
    checks: tuple[FrftCheck, ...]
    spectral_tol: float
    optical_tol: float

    @property
    def max_spectral_error(self) -> float:
        return max(c.spectral_error for c in self.checks)

    @property
    def max_optical_error(self) -> float:
        return max(c.optical_error for c in self.checks)

    @property
    def passed(self) -> bool:
        return (
            self.max_spectral_error < self.spectral_tol
            and self.max_optical_error < self.optical_tol
        )


@dataclass(frozen=True, slots=True)
class OpenCharfnResult:
    """Open-dynamics characteristic function plus the fluctuation identity."""

    trace: CharFnTrace
    dist: WorkDist
    gamma: float
    fluctuation_average: float
    doubling_drift: float | None
    artifacts: tuple[str, ...]


@dataclass(frozen=True, slots=True)
class JarzynskiReport:
    q0: float
    beta_hw: float
    mean_work: float
    expected_mean_work: float  # q0^2 / 2
    lhs: float  # sum_d P(d) e^{-beta d}
    rhs: float  # e^{-beta delta F}
    free_energy_delta: float
    jensen_bound: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return abs(self.lhs - self.rhs) <= self.tolerance


@dataclass(frozen=True, slots=True)
class UnitConversion:
    """Physical lens-chain geometry for one FRFT order."""

    lambda_nm: float
    f_mm: float
    alpha: float
    z_mm: float  # f (1 - cos alpha)
    k_per_mm: float  # 2 pi / lambda
    length_scale_mm: float  # sqrt(f |sin alpha| / k)


@dataclass(frozen=True, slots=True)
class GateResult:
    gate: str
    passed: bool
    value: float
    tolerance: float


@dataclass(frozen=True, slots=True)
class VerifyReport:
    suite: VerifySuite
    gates: tuple[GateResult, ...]
    elapsed_seconds: float
    artifact: str

    @property
    def passed(self) -> bool:
        return all(g.passed for g in self.gates)

    @property
    def failures(self) -> tuple[GateResult, ...]:
        return tuple(g for g in self.gates if not g.passed)
