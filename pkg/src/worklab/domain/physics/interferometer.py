"""
Two-path interferometer with 50:50 splitters and bulk detectors.

Upper path: free evolution for phase-time s, then the process.
Lower path: the process, then free evolution generated by the final
Hamiltonian. Output port 0 detects the "+" superposition

    out0 = 1/4 int |u_up + e^{i theta} u_low|^2 dx = offset + 1/2 Re(e^{i theta} <u_up|u_low>)

and <u_up|u_low> = conj(G_n(s)), so theta = 0 reads Re G and theta = pi/2
reads Im G.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from worklab.domain.entities import (
    IMAGINARY_PART,
    REAL_PART,
    CharFnTrace,
    IntensityTrace,
    InterferometerConfig,
    ThermalEnsemble,
    TransitionMatrix,
)
from worklab.domain.exceptions import (
    DimensionMismatchError,
    GridMismatchError,
    InvalidInterferometerConfigError,
    NormalizationFailureError,
)
from worklab.domain.physics.hermite import hg_basis, hg_mode
from worklab.domain.physics.optics import frft_spectral_many
from worklab.domain.physics.parallel import ordered_map
from worklab.domain.value_objects import ModeIndex, PhaseMask, SampledField

NORMALIZATION_TOL = 1e-6
THETA_TOL = 1e-12


@dataclass(frozen=True, slots=True)
class ModeReadout:
    """Detector readings for one input mode over all s samples."""

    out0: NDArray[np.float64]
    out1: NDArray[np.float64]
    power_up: float
    power_low: float
    input_power: float

    @property
    def offset(self) -> float:
        """2A: each arm contributes a quarter of its power to each detector."""
        return 0.25 * (self.power_up + self.power_low)

    @property
    def interference_scale(self) -> float:
        return 0.5 * math.sqrt(self.power_up * self.power_low)


class _PathEngine:
    """Precomputed bases shared read-only by all mode runs of one config."""

    def __init__(self, cfg: InterferometerConfig) -> None:
        self.cfg = cfg
        self.grid = cfg.resolved_grid
        self.n_basis = cfg.resolved_n_basis
        x = self.grid.x
        self.kick_in = np.exp(-1j * cfg.kick * x)  # D
        self.kick_out = np.exp(1j * cfg.kick * x)  # D^dagger
        self.matrix: TransitionMatrix | None = None
        self.mask: NDArray[np.complex128] | None = None
        if isinstance(cfg.process, PhaseMask):
            self.mask = cfg.process.profile.values
        else:
            self.matrix = cfg.process
            self.initial_modes = hg_basis(cfg.process.n_max, self.grid)
            final = hg_basis(cfg.process.m_max, self.grid).astype(np.complex128)
            if cfg.final_basis.is_displaced:
                final = final * self.kick_out[None, :]
            self.final_modes = final

    def process(self, fields: NDArray[np.complex128]) -> NDArray[np.complex128]:
        """Apply the process to a stack of fields (rows)."""
        if self.mask is not None:
            return fields * self.mask[None, :]
        assert self.matrix is not None
        coefficients = fields @ self.initial_modes.T * self.grid.dx
        return (coefficients @ self.matrix.entries.T) @ self.final_modes

    def final_free_evolution(
        self, field: NDArray[np.complex128], s: NDArray[np.float64]
    ) -> NDArray[np.complex128]:
        """V'(s) = D^dagger V(s) D for a displaced final basis, else V(s)."""
        if not self.cfg.final_basis.is_displaced:
            return frft_spectral_many(SampledField(self.grid, field), s, self.n_basis)
        demasked = SampledField(self.grid, field * self.kick_in)
        return frft_spectral_many(demasked, s, self.n_basis) * self.kick_out[None, :]

    def readout(self, n: int, s: NDArray[np.float64]) -> ModeReadout:
        phi = hg_mode(n, self.grid)
        dx = self.grid.dx
        upper = self.process(frft_spectral_many(phi, s, self.n_basis))
        processed = self.process(phi.values[None, :])[0]
        lower = self.final_free_evolution(processed, s)
        rotated = np.exp(1j * self.cfg.phase_offset) * lower
        out0 = 0.25 * np.sum(np.abs(upper + rotated) ** 2, axis=1) * dx
        out1 = 0.25 * np.sum(np.abs(upper - rotated) ** 2, axis=1) * dx
        power_up = float(np.mean(np.sum(np.abs(upper) ** 2, axis=1) * dx))
        power_low = float(np.mean(np.sum(np.abs(lower) ** 2, axis=1) * dx))
        return ModeReadout(
            out0=out0,
            out1=out1,
            power_up=power_up,
            power_low=power_low,
            input_power=phi.power,
        )


def mode_readout(
    n: ModeIndex | int, cfg: InterferometerConfig, s_grid: ArrayLike
) -> ModeReadout:
    """Detector readings for input mode n over a set of s samples."""
    s = np.atleast_1d(np.asarray(s_grid, dtype=np.float64))
    return _PathEngine(cfg).readout(ModeIndex.of(n).n, s)


def process_field(n: ModeIndex | int, cfg: InterferometerConfig) -> SampledField:
    """Input mode n right after the process, before the lower-arm free evolution."""
    engine = _PathEngine(cfg)
    phi = hg_mode(ModeIndex.of(n).n, engine.grid)
    return phi.with_values(engine.process(phi.values[None, :])[0])


def run_mode(n: ModeIndex | int, cfg: InterferometerConfig, s: float) -> tuple[float, float]:
    """(out0, out1) for input mode n at one phase-time s."""
    readout = mode_readout(n, cfg, [s])
    return float(readout.out0[0]), float(readout.out1[0])


def _support(ens: ThermalEnsemble, cfg: InterferometerConfig) -> tuple[int, int]:
    if isinstance(cfg.process, TransitionMatrix):
        if not cfg.process.covers(ens.n_cut):
            raise DimensionMismatchError(
                f"process covers n <= {cfg.process.n_max}, ensemble needs {ens.n_cut}"
            )
        return -ens.n_cut, cfg.process.m_max
    if cfg.resolved_n_basis < ens.n_cut:
        raise DimensionMismatchError(
            f"n_basis {cfg.resolved_n_basis} < ensemble cutoff {ens.n_cut}"
        )
    return -ens.n_cut, cfg.resolved_n_basis


def thermal_trace(
    ens: ThermalEnsemble,
    cfg: InterferometerConfig,
    s_grid: ArrayLike,
    *,
    workers: int = 1,
) -> IntensityTrace:
    """
    Boltzmann-weighted sum of per-mode readings (incoherent thermal input).

    Modes run on up to `workers` threads; the weighted sum is reduced in
    ascending n.
    """
    d_min, d_max = _support(ens, cfg)
    s = np.asarray(s_grid, dtype=np.float64)
    engine = _PathEngine(cfg)
    readouts = ordered_map(lambda n: engine.readout(n, s), range(ens.levels), workers)

    out0 = np.zeros_like(s)
    out1 = np.zeros_like(s)
    offset = scale = input_power = 0.0
    for weight, readout in zip(ens.weights, readouts, strict=True):
        p = float(weight)
        out0 += p * readout.out0
        out1 += p * readout.out1
        offset += p * readout.offset
        scale += p * readout.interference_scale
        input_power += p * readout.input_power
    return IntensityTrace(
        s_samples=s,
        intensity_out0=out0,
        intensity_out1=out1,
        offset=offset,
        theta=cfg.phase_offset,
        interference_scale=scale,
        input_power=input_power,
        d_min=d_min,
        d_max=d_max,
    )


def reconstruct_charfn(re_trace: IntensityTrace, im_trace: IntensityTrace) -> CharFnTrace:
    """
    G(s_k) = (out0 - offset) / scale from the theta = 0 and theta = pi/2 runs.

    Raises:
        InvalidInterferometerConfigError: If the traces are not the theta = 0
            and theta = pi/2 runs, in that order
        GridMismatchError: If the traces were sampled at different s
        NormalizationFailureError: If |Re G(0) - 1| > 1e-6
    """
    if not (
        math.isclose(re_trace.theta, REAL_PART, abs_tol=THETA_TOL)
        and math.isclose(im_trace.theta, IMAGINARY_PART, abs_tol=THETA_TOL)
    ):
        raise InvalidInterferometerConfigError(
            f"reconstruction needs the theta = 0 and pi/2 traces, "
            f"got theta = {re_trace.theta:.6g} and {im_trace.theta:.6g}"
        )
    if re_trace.s_samples.shape != im_trace.s_samples.shape or not np.array_equal(
        re_trace.s_samples, im_trace.s_samples
    ):
        raise GridMismatchError("intensity traces were sampled at different s")
    real = (re_trace.intensity_out0 - re_trace.offset) / re_trace.interference_scale
    imag = (im_trace.intensity_out0 - im_trace.offset) / im_trace.interference_scale
    values = real + 1j * imag
    s = re_trace.s_samples
    if s.size and s[0] == 0.0:
        # Im G(0) is left to the Hermitian-symmetry diagnostic
        deviation = abs(float(real[0]) - 1.0)
        if deviation > NORMALIZATION_TOL:
            raise NormalizationFailureError(
                f"reconstructed |Re G(0) - 1| = {deviation:.3e}; check the offset"
            )
    return CharFnTrace(
        s_samples=s,
        values=values,
        d_min=min(re_trace.d_min, im_trace.d_min),
        d_max=max(re_trace.d_max, im_trace.d_max),
    )
