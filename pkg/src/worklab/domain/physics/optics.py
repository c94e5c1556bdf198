"""
Paraxial wave engine in oscillator units (k = 1).

The paraxial equation i dPsi/dz = [-(1/2) d^2/dx^2 + dn(x)/n0] Psi is the
oscillator Schroedinger equation with z as time; the harmonic channel
dn/n0 = x^2/2 makes the fractional Fourier transform the free evolution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from worklab.domain.exceptions import (
    BasisDeficitError,
    InvalidElementError,
    StepTooCoarseError,
    WrapAroundError,
    ZeroFocalLengthError,
)
from worklab.domain.physics.hermite import hg_basis
from worklab.domain.value_objects import (
    FreeSpace,
    FrftOrder,
    IndexChannel,
    OpticalElement,
    PhaseMask,
    SampledField,
    ThinLens,
)

GUARD_FRACTION = 0.9
GUARD_LEAK_TOL = 1e-6
BASIS_RESIDUAL_TOL = 1e-6
MAX_STEP_PHASE = 0.1
COS_SNAP = 1e-15


@dataclass(frozen=True, slots=True)
class PositionMoments:
    centroid: float
    variance: float


# =============================================================================
# Elements
# =============================================================================


def fresnel_propagate(field: SampledField, z: float, *, backward: bool = False) -> SampledField:
    """
    Free propagation over z >= 0: multiply the spectrum by e^{-i z kx^2 / 2}.

    backward=True applies the conjugate transfer function (propagation by -z).
    """
    distance = FreeSpace(z).z
    sign = 1.0 if backward else -1.0
    transfer = np.exp(sign * 0.5j * distance * field.grid.kx**2)
    return field.with_values(np.fft.ifft(np.fft.fft(field.values) * transfer))


def thin_lens(field: SampledField, f: float) -> SampledField:
    """
    Pointwise lens phase e^{-i x^2 / (2 f)}; f = inf is the identity.

    Raises:
        ZeroFocalLengthError: If f == 0
    """
    lens = ThinLens(f)
    if lens.is_identity:
        return field
    return field.with_values(field.values * np.exp(-0.5j * field.grid.x**2 / lens.f))


def apply_mask(field: SampledField, mask: PhaseMask) -> SampledField:
    field.require_grid(mask.grid)
    return field.with_values(field.values * mask.profile.values)


def split_step_evolve(field: SampledField, channel: IndexChannel) -> SampledField:
    """
    Strang splitting: half potential step, full kinetic step, half potential
    step, repeated channel.steps times.

    Raises:
        StepTooCoarseError: If max|dn/n0| * dz >= 0.1 rad
    """
    field.require_grid(channel.grid)
    potential = channel.delta_n_over_n0.values.real
    dz = channel.dz
    excursion = float(np.max(np.abs(potential))) * dz
    if excursion >= MAX_STEP_PHASE:
        raise StepTooCoarseError(
            f"per-step phase excursion {excursion:.3g} rad >= {MAX_STEP_PHASE}; "
            f"use more than {channel.steps} steps"
        )
    half_potential = np.exp(-0.5j * dz * potential)
    kinetic = np.exp(-0.5j * dz * field.grid.kx**2)
    values = field.values.copy()
    for _ in range(channel.steps):
        values *= half_potential
        values = np.fft.ifft(np.fft.fft(values) * kinetic)
        values *= half_potential
    return field.with_values(values)


def propagate(field: SampledField, element: OpticalElement) -> SampledField:
    """Apply any optical element."""
    match element:
        case FreeSpace(z=z):
            return fresnel_propagate(field, z)
        case ThinLens(f=f):
            return thin_lens(field, f)
        case PhaseMask():
            return apply_mask(field, element)
        case IndexChannel():
            return split_step_evolve(field, element)
    raise TypeError(f"unsupported optical element {type(element).__name__}")


# =============================================================================
# Fractional Fourier transform
# =============================================================================


def chain_distance(alpha: float, f: float) -> float:
    """z_alpha = 2 f sin^2(alpha / 2), written as f (1 - cos alpha)."""
    cos_alpha = math.cos(alpha)
    # quarter-period orders land exactly on z = f
    if abs(cos_alpha) < COS_SNAP:
        cos_alpha = 0.0
    return f * (1.0 - cos_alpha)


def matched_focal_length(alpha: float) -> float:
    """
    Focal length 1/sin(alpha) that makes the lens chain act in oscillator
    units, so phi_0 maps to phi_0. Infinite at alpha = 0 and pi.
    """
    s = math.sin(alpha)
    if s == 0.0 or abs(s) < 1e-300:
        return math.inf
    return 1.0 / s


def _check_guard_band(field: SampledField, stage: str) -> None:
    power = field.power
    if power == 0.0:
        return
    guard = field.grid.guard_mask(GUARD_FRACTION)
    leaked = float(np.sum(np.abs(field.values[guard]) ** 2) * field.grid.dx) / power
    if leaked > GUARD_LEAK_TOL:
        raise WrapAroundError(
            f"{leaked:.3e} of the power reached the guard band after {stage}; "
            f"enlarge the grid"
        )


def parity(field: SampledField) -> SampledField:
    """x -> -x on the mirrored grid."""
    return field.with_values(field.values[::-1])


def frft_optical(field: SampledField, order: FrftOrder, f: float | None = None) -> SampledField:
    """
    Lens chain FreeSpace(z) -> ThinLens(f) -> FreeSpace(z), z = 2 f sin^2(alpha/2).

    f defaults to matched_focal_length(alpha). Orders in [pi, 2 pi) first
    apply the inverting 2f imaging step (parity with phase e^{-i pi/2}) and
    run the chain for alpha - pi. A user-supplied f replaces the matched
    one and realizes a rescaled transform.

    Raises:
        InvalidElementError: If alpha is 0 or 2 pi
        WrapAroundError: If more than 1e-6 of the power reaches the outer
            10% of the grid at any stage
    """
    if not order.is_interior:
        raise InvalidElementError(
            f"the lens chain needs 0 < alpha < 2pi, got {order.alpha}"
        )
    alpha = order.alpha
    _check_guard_band(field, "input")
    if alpha >= math.pi:
        field = parity(field).scaled(-1j)
        alpha -= math.pi
    if alpha == 0.0:
        return field
    focal = matched_focal_length(alpha) if f is None else f
    z = chain_distance(alpha, focal)
    if z < 0:
        raise InvalidElementError(f"focal length {focal} gives a negative distance")
    stages: tuple[tuple[str, OpticalElement], ...] = (
        ("first free-space section", FreeSpace(z)),
        ("lens", ThinLens(focal)),
        ("second free-space section", FreeSpace(z)),
    )
    for stage, element in stages:
        field = propagate(field, element)
        _check_guard_band(field, stage)
    return field


def _project(
    field: SampledField, n_basis: int
) -> tuple[NDArray[np.float64], NDArray[np.complex128]]:
    """Mode coefficients on phi_0..phi_{n_basis}, with the residual check."""
    basis = hg_basis(n_basis, field.grid)
    coefficients = basis @ field.values * field.grid.dx
    power = field.power
    if power > 0.0:
        residual = field.values - coefficients @ basis
        fraction = float(np.sum(np.abs(residual) ** 2) * field.grid.dx) / power
        if fraction > BASIS_RESIDUAL_TOL:
            raise BasisDeficitError(
                f"{fraction:.3e} of the power lies outside the first "
                f"{n_basis + 1} modes"
            )
    return basis, coefficients


def frft_spectral_many(
    field: SampledField, alphas: ArrayLike, n_basis: int
) -> NDArray[np.complex128]:
    """
    Spectral FRFT of one field for many orders at once.

    Projects once, multiplies coefficient n by e^{-i alpha (n + 1/2)} for each
    alpha, and resynthesizes; returns an (len(alphas), n_points) array.
    """
    basis, coefficients = _project(field, n_basis)
    alpha = np.asarray(alphas, dtype=np.float64)
    for a in np.atleast_1d(alpha):
        FrftOrder(float(a))
    levels = np.arange(n_basis + 1, dtype=np.float64) + 0.5
    phases = np.exp(-1j * np.outer(np.atleast_1d(alpha), levels))
    return (phases * coefficients[None, :]) @ basis


def frft_spectral(field: SampledField, order: FrftOrder, n_basis: int) -> SampledField:
    """
    Exact free evolution V_alpha phi_n = e^{-i alpha (n + 1/2)} phi_n applied
    through the first n_basis + 1 modes.

    Raises:
        BasisDeficitError: If more than 1e-6 of the power is not representable
        GridTooSmallError: If the grid cannot hold phi_{n_basis}
    """
    return field.with_values(frft_spectral_many(field, [order.alpha], n_basis)[0])


def grid_fourier_transform(field: SampledField) -> SampledField:
    """
    Unitary continuous Fourier transform (1/sqrt(2 pi)) int f(x) e^{-i k x} dx
    by direct quadrature, sampled back on the same grid (k_j = x_j).
    """
    x = field.grid.x
    kernel = np.exp(-1j * np.outer(x, x))
    values = kernel @ field.values * field.grid.dx / math.sqrt(2.0 * math.pi)
    return field.with_values(values)


# =============================================================================
# Comparison helpers
# =============================================================================


def align_global_phase(field: SampledField, reference: SampledField) -> SampledField:
    """Rotate field by the phase of <reference|field> so it best matches reference."""
    field.require_grid(reference)
    inner = np.vdot(reference.values, field.values)
    if inner == 0:
        return field
    return field.scaled(np.exp(-1j * np.angle(inner)))


def l2_distance(f: SampledField, g: SampledField) -> float:
    f.require_grid(g)
    return float(np.sqrt(np.sum(np.abs(f.values - g.values) ** 2) * f.grid.dx))


def position_moments(field: SampledField) -> PositionMoments:
    """Centroid and central second moment of |field|^2."""
    density = np.abs(field.values) ** 2
    total = float(np.sum(density))
    x = field.grid.x
    centroid = float(np.sum(x * density)) / total
    variance = float(np.sum((x - centroid) ** 2 * density)) / total
    return PositionMoments(centroid=centroid, variance=variance)
