"""Oscillator spectrum, truncated Gibbs ensemble, free energies."""

from __future__ import annotations

import math

import numpy as np

from worklab.domain.entities import ThermalEnsemble
from worklab.domain.exceptions import (
    DegenerateTemperatureError,
    DimensionMismatchError,
    InvalidTemperatureError,
)
from worklab.domain.value_objects import Spectrum

# e^{-beta n} stays a normal double up to beta n = 700
MAX_BOLTZMANN_EXPONENT = 700.0


def cutoff_level(beta_hw: float, tail_tol: float) -> int:
    """
    Smallest n_cut with geometric tail mass e^{-beta (n_cut + 1)} < tail_tol.
    """
    return math.floor(-math.log(tail_tol) / beta_hw)


def _log_one_minus_exp(a: float) -> float:
    """log(1 - e^{-a}) for a > 0."""
    return math.log(-math.expm1(-a))


def _gibbs(beta_hw: float, n_cut: int, tail_tol: float) -> ThermalEnsemble:
    levels = n_cut + 1
    kept_mass = -math.expm1(-beta_hw * levels)

    # p_n = e^{-beta n}(1 - e^{-beta}) / kept_mass
    log_weights = (
        -beta_hw * np.arange(levels, dtype=np.float64)
        + _log_one_minus_exp(beta_hw)
        - math.log(kept_mass)
    )
    weights = np.exp(log_weights)
    weights /= math.fsum(weights)

    log_partition = (
        -0.5 * beta_hw + _log_one_minus_exp(beta_hw * levels) - _log_one_minus_exp(beta_hw)
    )
    return ThermalEnsemble(
        beta_hw=beta_hw,
        weights=weights,
        n_cut=n_cut,
        log_partition=log_partition,
        renormalization=kept_mass,
        tail_tol=tail_tol,
    )


def thermal_weights(beta_hw: float, tail_tol: float) -> ThermalEnsemble:
    """
    Boltzmann weights of the oscillator, cut where the tail mass drops below
    tail_tol and renormalized over the kept levels.

    Args:
        beta_hw: Inverse temperature in units of 1/(hbar omega), > 0
        tail_tol: Discarded probability mass, in (0, 1)

    Returns:
        ThermalEnsemble with weights summing to 1 over n <= n_cut

    Raises:
        DegenerateTemperatureError: If beta_hw <= 0
        InvalidTemperatureError: If tail_tol is outside (0, 1)
    """
    if not math.isfinite(beta_hw) or beta_hw <= 0:
        raise DegenerateTemperatureError(
            f"beta_hw must be positive (infinite temperature is not normalizable), "
            f"got {beta_hw}"
        )
    if not 0.0 < tail_tol < 1.0:
        raise InvalidTemperatureError(f"tail_tol must lie in (0, 1), got {tail_tol}")
    return _gibbs(beta_hw, cutoff_level(beta_hw, tail_tol), tail_tol)


def extended_ensemble(ens: ThermalEnsemble, n_cut: int) -> ThermalEnsemble:
    """
    The same Gibbs state kept up to a larger cutoff.

    Levels whose weight would underflow (beta n > 700) stay dropped, so the
    result may stop short of n_cut at low temperature.

    Raises:
        DimensionMismatchError: If n_cut is below the current cutoff
    """
    if n_cut < ens.n_cut:
        raise DimensionMismatchError(
            f"cannot shrink the ensemble from n_cut={ens.n_cut} to {n_cut}"
        )
    reachable = max(ens.n_cut, math.floor(MAX_BOLTZMANN_EXPONENT / ens.beta_hw))
    target = min(n_cut, reachable)
    return _gibbs(ens.beta_hw, target, math.exp(-ens.beta_hw * (target + 1)))


def full_log_partition(beta_hw: float) -> float:
    """Untruncated log Z = -beta/2 - log(1 - e^{-beta}) for the reference oscillator."""
    return Spectrum.harmonic().log_partition(beta_hw)


def free_energy_delta(initial: Spectrum, final: Spectrum, beta_hw: float) -> float:
    """
    Delta F = -(1/beta) ln(Z_F / Z_I) in units of hbar omega.

    Identical spectra give exactly 0.
    """
    if beta_hw <= 0:
        raise DegenerateTemperatureError(f"beta_hw must be positive, got {beta_hw}")
    if initial == final:
        return 0.0
    return (initial.log_partition(beta_hw) - final.log_partition(beta_hw)) / beta_hw
