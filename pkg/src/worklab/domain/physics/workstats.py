"""
Characteristic function, work distribution and fluctuation relations for
the closed (unitary) process with equal initial and final spectra.

With levels n + 1/2 the work zeta = m - n is an integer, so one period of
s in [0, 2 pi) carries the whole distribution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from worklab.domain.entities import CharFnTrace, ThermalEnsemble, TransitionMatrix, WorkDist
from worklab.domain.exceptions import (
    AliasingError,
    DimensionMismatchError,
    NonRealDistributionError,
    NormalizationFailureError,
)

IMAGINARY_RESIDUE_TOL = 1e-9
UNIFORMITY_TOL = 1e-12


@dataclass(frozen=True, slots=True)
class WorkMoments:
    mean: float
    variance: float


def _check_cover(ens: ThermalEnsemble, transitions: TransitionMatrix) -> None:
    if not transitions.covers(ens.n_cut):
        raise DimensionMismatchError(
            f"transition matrix has n_max={transitions.n_max} < n_cut={ens.n_cut}"
        )


def joint_probabilities(
    ens: ThermalEnsemble, transitions: TransitionMatrix
) -> NDArray[np.float64]:
    """p_{m,n} = p_n |c_{m,n}|^2 over the kept levels n <= n_cut."""
    _check_cover(ens, transitions)
    return transitions.probabilities[:, : ens.levels] * ens.weights[None, :]


def workdist_direct(ens: ThermalEnsemble, transitions: TransitionMatrix) -> WorkDist:
    """P(d) = sum over m - n = d of p_n |c_{m,n}|^2, support -n_cut..m_max."""
    joint = joint_probabilities(ens, transitions)
    m = np.arange(joint.shape[0])[:, None]
    n = np.arange(joint.shape[1])[None, :]
    shifted = (m - n + ens.n_cut).ravel()
    # bincount sums each bin in ascending flat order, so the result is deterministic
    probs = np.bincount(shifted, weights=joint.ravel(), minlength=transitions.m_max + ens.levels)
    return WorkDist(d_min=-ens.n_cut, probs=probs)


def default_sample_count(ens: ThermalEnsemble, transitions: TransitionMatrix) -> int:
    """M = 2 (m_max + n_cut) + 1."""
    return 2 * (transitions.m_max + ens.n_cut) + 1


def uniform_s_grid(count: int) -> NDArray[np.float64]:
    """s_k = 2 pi k / M for k = 0..M-1."""
    if count < 1:
        raise AliasingError(f"sample count must be >= 1, got {count}")
    return 2.0 * np.pi * np.arange(count, dtype=np.float64) / count


def _charfn_from_dist(dist: WorkDist, s: NDArray[np.float64]) -> NDArray[np.complex128]:
    phases = np.exp(1j * np.outer(s, dist.support))
    return phases @ dist.probs.astype(np.complex128)


def charfn_direct(ens: ThermalEnsemble, transitions: TransitionMatrix, s: float) -> complex:
    """G(s) = sum_{m,n} p_n |c_{m,n}|^2 e^{i s (m - n)}."""
    dist = workdist_direct(ens, transitions)
    return complex(_charfn_from_dist(dist, np.array([s], dtype=np.float64))[0])


def charfn_trace(
    ens: ThermalEnsemble, transitions: TransitionMatrix, samples: int | None = None
) -> CharFnTrace:
    """G on the uniform s grid, declaring support -n_cut..m_max."""
    count = samples if samples is not None else default_sample_count(ens, transitions)
    s = uniform_s_grid(count)
    dist = workdist_direct(ens, transitions)
    return CharFnTrace(
        s_samples=s,
        values=_charfn_from_dist(dist, s),
        d_min=dist.d_min,
        d_max=dist.d_max,
    )


def _check_uniform(trace: CharFnTrace) -> None:
    count = len(trace)
    if count < trace.span:
        raise AliasingError(
            f"{count} samples cannot resolve a support of {trace.span} work values"
        )
    expected = uniform_s_grid(count)
    if np.max(np.abs(trace.s_samples - expected)) > UNIFORMITY_TOL * 2 * np.pi:
        raise AliasingError("s samples are not the uniform grid 2 pi k / M")


def workdist_from_trace(trace: CharFnTrace) -> WorkDist:
    """
    Invert a uniform trace: P(d) = (1/M) sum_k G(s_k) e^{-i s_k d}.

    Raises:
        AliasingError: If the samples are too few or not uniform
        NonRealDistributionError: If any P(d) keeps an imaginary part > 1e-9
    """
    _check_uniform(trace)
    count = len(trace)
    spectrum = np.fft.fft(trace.values) / count
    support = np.arange(trace.d_min, trace.d_max + 1)
    probs = spectrum[support % count]
    residue = float(np.max(np.abs(probs.imag)))
    if residue > IMAGINARY_RESIDUE_TOL:
        raise NonRealDistributionError(
            f"inverted distribution has imaginary residue {residue:.3e}"
        )
    return WorkDist(d_min=trace.d_min, probs=probs.real)


def hermitian_symmetry_defect(trace: CharFnTrace) -> float:
    """max_k |G(2 pi - s_k) - conj(G(s_k))| on a uniform trace."""
    values = trace.values
    mirrored = np.roll(values[::-1], 1)
    return float(np.max(np.abs(mirrored - values.conj())))


def check_normalization(trace: CharFnTrace, tol: float) -> float:
    """
    Return |G(0) - 1|; raise NormalizationFailureError above tol.

    Requires s_0 = 0.
    """
    if len(trace) == 0 or trace.s_samples[0] != 0.0:
        raise AliasingError("normalization check needs a sample at s = 0")
    deviation = abs(complex(trace.values[0]) - 1.0)
    if deviation > tol:
        raise NormalizationFailureError(f"|G(0) - 1| = {deviation:.3e} exceeds {tol}")
    return deviation


def moments(dist: WorkDist) -> WorkMoments:
    support = dist.support.astype(np.float64)
    mean = math.fsum(support * dist.probs)
    variance = math.fsum((support - mean) ** 2 * dist.probs)
    return WorkMoments(mean=mean, variance=variance)


def jarzynski_lhs(dist: WorkDist, beta_hw: float) -> float:
    """<e^{-beta W}> = sum_d P(d) e^{-beta_hw d}."""
    return math.fsum(dist.probs * np.exp(-beta_hw * dist.support.astype(np.float64)))


def jensen_bound(dist: WorkDist, beta_hw: float) -> float:
    """e^{-beta <W>}, a lower bound for jarzynski_lhs."""
    return math.exp(-beta_hw * moments(dist).mean)
