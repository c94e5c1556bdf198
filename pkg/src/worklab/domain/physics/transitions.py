"""
Transition amplitudes c_{m,n} = <m| D(p0) |n> of the momentum-kick quench.

The closed form is evaluated through its associated-Laguerre equivalent

    c_{m,n} = (-i sgn q0)^d (|q0|/sqrt 2)^d sqrt(n_<! / n_>!) e^{-q0^2/4}
              L_{n_<}^{(d)}(q0^2 / 2),        d = |m - n|,

with magnitudes assembled in log-space. coeff_series sums the finite
binomial series literally and is kept as a cross-check for low orders.
"""

from __future__ import annotations

import math

import numpy as np
from numpy.typing import NDArray
from scipy.special import eval_genlaguerre, gammaln

from worklab.domain.entities import TransitionMatrix
from worklab.domain.exceptions import (
    GridTooSmallError,
    NonUnitaryMaskError,
    TruncationFailureError,
)
from worklab.domain.physics.hermite import hg_basis
from worklab.domain.value_objects import GridSpec, PhaseMask, Provenance, SampledField

# (-i)^d for d mod 4
_MINUS_I_POWERS = np.array([1.0, -1.0j, -1.0, 1.0j], dtype=np.complex128)


def truncation_cap(q0: float, n_max: int) -> int:
    """Hard ceiling on m_max: 4 n_max + 20 (1 + q0^2)."""
    return math.ceil(4 * n_max + 20 * (1 + q0 * q0))


def _closed_block(q0: float, m: NDArray[np.int64], n: NDArray[np.int64]) -> NDArray[np.complex128]:
    """Broadcast closed-form amplitudes over integer index arrays."""
    m, n = np.broadcast_arrays(m, n)
    if q0 == 0.0:
        return (m == n).astype(np.complex128)
    lo = np.minimum(m, n).astype(np.int64)
    hi = np.maximum(m, n).astype(np.int64)
    d = hi - lo
    x = 0.5 * q0 * q0
    laguerre = eval_genlaguerre(lo, d.astype(np.float64), x)
    with np.errstate(divide="ignore"):
        log_mag = (
            d * math.log(abs(q0) / math.sqrt(2.0))
            + 0.5 * (gammaln(lo + 1.0) - gammaln(hi + 1.0))
            - 0.25 * q0 * q0
            + np.log(np.abs(laguerre))
        )
    # Overflowed Laguerre values only occur where the amplitude underflows.
    log_mag = np.where(np.isfinite(log_mag), log_mag, -np.inf)
    phase = _MINUS_I_POWERS[d % 4]
    if q0 < 0:
        phase = phase.conj()
    return phase * np.sign(laguerre) * np.exp(log_mag)


def coeff_closed(m: int, n: int, q0: float) -> complex:
    """
    Closed-form c_{m,n}(q0); q0 = 0 gives the Kronecker delta exactly.
    """
    if m < 0 or n < 0:
        raise ValueError(f"mode indices must be >= 0, got ({m}, {n})")
    return complex(_closed_block(q0, np.array(m), np.array(n)))


def coeff_series(m: int, n: int, q0: float) -> complex:
    """
    Literal finite sum

        e^{-q0^2/4} / sqrt(2^{m+n} m! n!) sum_r r! 2^r C(m,r) C(n,r) (-i q0)^{m+n-2r}

    with the exponent combined per term. Only for small orders (factorials).
    """
    if q0 == 0.0:
        return complex(m == n)
    prefactor = math.exp(-0.25 * q0 * q0) / math.sqrt(
        2.0 ** (m + n) * math.factorial(m) * math.factorial(n)
    )
    total = 0j
    for r in range(min(m, n) + 1):
        weight = math.factorial(r) * 2**r * math.comb(m, r) * math.comb(n, r)
        total += weight * (-1j * q0) ** (m + n - 2 * r)
    return prefactor * total


def _kick_profile(q0: float, grid: GridSpec) -> NDArray[np.complex128]:
    if grid.dx * abs(q0) >= math.pi / 4:
        raise GridTooSmallError(
            f"dx {grid.dx:.4g} does not resolve the kick phase (needs dx |q0| < pi/4)"
        )
    return np.exp(-1j * q0 * grid.x)


def coeff_quadrature(m: int, n: int, q0: float, grid: GridSpec) -> complex:
    """
    Midpoint-rule value of the integral of phi_m phi_n e^{-i q0 x}; the
    independent oracle for coeff_closed.
    """
    basis = hg_basis(max(m, n), grid)
    kick = _kick_profile(q0, grid)
    return complex(np.sum(basis[m] * basis[n] * kick) * grid.dx)


def quadrature_matrix(q0: float, n_max: int, grid: GridSpec) -> TransitionMatrix:
    """All quadrature amplitudes for m, n <= n_max."""
    basis = hg_basis(n_max, grid)
    kick = _kick_profile(q0, grid)
    entries = (basis * kick) @ basis.T * grid.dx
    return TransitionMatrix(q0=q0, entries=entries, provenance=Provenance.QUADRATURE)


def closed_matrix(q0: float, m_max: int, n_max: int) -> TransitionMatrix:
    """Closed-form amplitudes on a fixed (m_max + 1) x (n_max + 1) block."""
    m = np.arange(m_max + 1, dtype=np.int64)[:, None]
    n = np.arange(n_max + 1, dtype=np.int64)[None, :]
    return TransitionMatrix(
        q0=q0, entries=_closed_block(q0, m, n), provenance=Provenance.CLOSED_FORM
    )


def build_matrix(q0: float, n_max: int, unitarity_tol: float) -> TransitionMatrix:
    """
    Closed-form matrix with the smallest m_max >= n_max whose every column
    deficit 1 - sum_m |c_{m,n}|^2 is below unitarity_tol.

    Raises:
        TruncationFailureError: If the cap 4 n_max + 20 (1 + q0^2) is reached
            without meeting the tolerance
    """
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    cap = truncation_cap(q0, n_max)
    rows = min(cap, n_max + math.ceil(q0 * q0 + 10.0 * abs(q0) + 20.0))
    while True:
        full = closed_matrix(q0, rows, n_max).entries
        cumulative = np.cumsum(np.abs(full) ** 2, axis=0)
        worst_deficit = np.max(1.0 - cumulative, axis=1)
        candidates = np.nonzero(worst_deficit[n_max:] < unitarity_tol)[0]
        if candidates.size or rows == cap:
            break
        rows = min(cap, 2 * rows)
    if candidates.size == 0:
        raise TruncationFailureError(
            f"no m_max <= {cap} meets unitarity_tol {unitarity_tol} "
            f"(best deficit {worst_deficit[-1]:.3e}) for q0={q0}, n_max={n_max}"
        )
    m_max = n_max + int(candidates[0])
    return TransitionMatrix(
        q0=q0, entries=full[: m_max + 1], provenance=Provenance.CLOSED_FORM
    )


def process_from_grid(
    mask: SampledField | PhaseMask, n_max: int, grid: GridSpec
) -> TransitionMatrix:
    """
    Mode-space matrix of a pointwise phase mask: c_{m,n} = <phi_m| mask |phi_n>.

    Raises:
        NonUnitaryMaskError: If any sample is off the unit circle by > 1e-9
        GridMismatchError: If the mask lives on another grid
    """
    field = mask.profile if isinstance(mask, PhaseMask) else mask
    field.require_grid(grid)
    deviation = float(np.max(np.abs(np.abs(field.values) - 1.0)))
    if deviation > 1e-9:
        raise NonUnitaryMaskError(
            f"mask modulus deviates from 1 by {deviation:.3e}"
        )
    basis = hg_basis(n_max, grid)
    entries = (basis * field.values) @ basis.T * grid.dx
    return TransitionMatrix(q0=None, entries=entries, provenance=Provenance.GRID_PROCESS)
