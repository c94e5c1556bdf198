"""
Hermite polynomials and normalized Hermite-Gaussian modes on a grid.

Modes are generated by the normalized three-term recurrence with a per-sample
log scale, so neither factorials nor powers of x are ever formed and orders
in the hundreds stay finite.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np
from numpy.typing import NDArray

from worklab.domain.exceptions import GridTooSmallError
from worklab.domain.value_objects import GridSpec, ModeIndex, SampledField
from worklab.domain.value_objects.grid_spec import TURNING_POINT_SAFETY, turning_point

_RESCALE_AT = 1e150
_LOG_RESCALE = math.log(_RESCALE_AT)
_LOG_PI_QUARTER = 0.25 * math.log(math.pi)


def hermite_eval(n: ModeIndex | int, x: float) -> float:
    """Physicists' H_n(x) via H_{k+1} = 2x H_k - 2k H_{k-1}."""
    order = ModeIndex.of(n).n
    prev, cur = 0.0, 1.0
    for k in range(order):
        prev, cur = cur, 2.0 * x * cur - 2.0 * k * prev
    return cur


def check_mode_fits(n: int, grid: GridSpec) -> None:
    """
    Raise GridTooSmallError unless the grid covers and resolves mode n.

    Coverage: half_width >= 1.5 sqrt(2n+1). Resolution: dx <= pi / (2 sqrt(2n+1)).
    """
    tp = turning_point(n)
    if grid.half_width < TURNING_POINT_SAFETY * tp:
        raise GridTooSmallError(
            f"half_width {grid.half_width:.4g} < {TURNING_POINT_SAFETY} x turning "
            f"point {tp:.4g} of mode {n}"
        )
    if grid.dx > math.pi / (2.0 * tp):
        raise GridTooSmallError(
            f"dx {grid.dx:.4g} does not resolve mode {n} (needs <= {math.pi / (2.0 * tp):.4g})"
        )


@lru_cache(maxsize=32)
def _basis_table(n_max: int, grid: GridSpec) -> NDArray[np.float64]:
    x = grid.x
    table = np.empty((n_max + 1, x.size), dtype=np.float64)
    log_scale = -0.5 * x**2 - _LOG_PI_QUARTER
    prev = np.zeros_like(x)
    cur = np.ones_like(x)
    table[0] = np.exp(log_scale)
    for k in range(n_max):
        nxt = math.sqrt(2.0 / (k + 1)) * x * cur - math.sqrt(k / (k + 1)) * prev
        prev, cur = cur, nxt
        big = np.abs(cur) > _RESCALE_AT
        if np.any(big):
            cur[big] /= _RESCALE_AT
            prev[big] /= _RESCALE_AT
            log_scale[big] += _LOG_RESCALE
        table[k + 1] = cur * np.exp(log_scale)
    table.setflags(write=False)
    return table


def hg_basis(n_max: int, grid: GridSpec) -> NDArray[np.float64]:
    """
    Modes phi_0..phi_{n_max} as a read-only (n_max + 1, n_points) matrix.

    Raises:
        GridTooSmallError: If the grid cannot hold phi_{n_max}
    """
    ModeIndex.of(n_max)
    check_mode_fits(n_max, grid)
    return _basis_table(n_max, grid)


def hg_mode(n: ModeIndex | int, grid: GridSpec) -> SampledField:
    """Normalized oscillator eigenfunction phi_n sampled on the grid."""
    order = ModeIndex.of(n).n
    return SampledField(grid=grid, values=hg_basis(order, grid)[order])


def overlap(f: SampledField, g: SampledField) -> complex:
    """Midpoint-rule inner product sum conj(f_j) g_j dx."""
    f.require_grid(g)
    return complex(np.vdot(f.values, g.values) * f.grid.dx)
