"""
Open dynamics on a truncated eigenbasis: Kraus channels, two-point joint
probabilities, the generalized characteristic function, the fluctuation
value gamma and the ancilla-interferometer reduced state.

Operators live in the eigenbasis of the initial Hamiltonian truncated to D
levels. Statements about displaced operators hold for indices below
D - truncation_margin(q0).
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy.linalg import polar

from worklab.domain.entities import (
    DensityMatrix,
    KrausChannel,
    TruncatedOperator,
    WorkDist,
)
from worklab.domain.exceptions import (
    CompletenessViolationError,
    DimensionMismatchError,
    InvalidOperatorError,
    NonRealGammaError,
    OverflowRiskError,
)
from worklab.domain.physics.transitions import process_from_grid
from worklab.domain.value_objects import (
    ChannelRecipe,
    OperatorKind,
    OperatorTerm,
    SampledField,
)

PROJECTOR_TOL = 1e-10
GAMMA_RESIDUE_TOL = 1e-10
RAW_EXPONENT_LIMIT = 700.0
JOINT_PROB_FLOOR = -1e-12
DROP_KRAUS_NORM = 1e-14
INTEGER_WORK_TOL = 1e-9


# =============================================================================
# Operators and Hamiltonians
# =============================================================================


def truncation_margin(q0: float) -> int:
    """Indices at or above D - ceil(4 q0^2 + 8) are not trusted."""
    return math.ceil(4.0 * q0 * q0 + 8.0)


def _eigh(op: TruncatedOperator) -> tuple[NDArray[np.float64], NDArray[np.complex128]]:
    if not op.is_hermitian():
        raise InvalidOperatorError("operator must be Hermitian")
    levels, vectors = np.linalg.eigh(op.entries)
    return levels, vectors


def exp_hermitian(op: TruncatedOperator, coefficient: complex) -> NDArray[np.complex128]:
    """exp(coefficient * H) through the eigendecomposition of Hermitian H."""
    levels, vectors = _eigh(op)
    return (vectors * np.exp(coefficient * levels)[None, :]) @ vectors.conj().T


def position_operator(dim: int) -> TruncatedOperator:
    """X = (a + a^dagger) / sqrt 2 on the first dim levels."""
    off = np.sqrt(np.arange(1, dim, dtype=np.float64) / 2.0)
    return TruncatedOperator(np.diag(off, 1) + np.diag(off, -1))


def displacement_operator(q0: float, dim: int) -> TruncatedOperator:
    """D = exp(-i q0 X_D): exactly unitary in the truncated space."""
    return TruncatedOperator(exp_hermitian(position_operator(dim), -1j * q0))


def evolution_operator(h: TruncatedOperator, s: complex) -> TruncatedOperator:
    """V(s) = exp(-i s H)."""
    return TruncatedOperator(exp_hermitian(h, -1j * s))


def number_hamiltonian(dim: int, scale: float = 1.0) -> TruncatedOperator:
    """diag(scale (n + 1/2)), the initial Hamiltonian in its own eigenbasis."""
    return TruncatedOperator.diagonal(scale * (np.arange(dim) + 0.5))


def displaced_hamiltonian(q0: float, dim: int) -> TruncatedOperator:
    """H_F = D^dagger H_I D, whose eigenvectors are D^dagger |n>."""
    d = displacement_operator(q0, dim).entries
    h = number_hamiltonian(dim).entries
    return TruncatedOperator(d.conj().T @ h @ d)


def eigenlevels(h: TruncatedOperator) -> NDArray[np.float64]:
    return _eigh(h)[0]


def eigenprojectors(h: TruncatedOperator) -> tuple[TruncatedOperator, ...]:
    """Rank-one eigenprojectors in ascending eigenvalue order."""
    _, vectors = _eigh(h)
    return tuple(
        TruncatedOperator(np.outer(vectors[:, k], vectors[:, k].conj()))
        for k in range(vectors.shape[1])
    )


def thermal_state(beta_hw: float, dim: int) -> DensityMatrix:
    """Gibbs state of the oscillator normalized over the first dim levels."""
    log_w = -beta_hw * np.arange(dim, dtype=np.float64)
    weights = np.exp(log_w - log_w.max())
    return DensityMatrix(np.diag(weights / math.fsum(weights)).astype(np.complex128))


def dephase(rho: DensityMatrix, h_initial: TruncatedOperator) -> NDArray[np.complex128]:
    """M_I(rho) = sum_n P_n rho P_n over the eigenprojectors of H_I."""
    _, q = _eigh(h_initial)
    populations = np.real(np.einsum("an,ab,bn->n", q.conj(), rho.entries, q))
    return (q * populations[None, :]) @ q.conj().T


# =============================================================================
# Environments and Kraus channels
# =============================================================================


class PolarizationBasis(str, Enum):
    """Measurement basis of the polarization qubit."""

    HV = "hv"  # horizontal / vertical
    DIAGONAL = "diagonal"  # +45 / -45 degrees

    def __str__(self) -> str:
        """Return string value for display."""
        return self.value

    def vectors(self) -> NDArray[np.complex128]:
        """Basis vectors as columns, in the (|H>, |V>) representation."""
        if self is PolarizationBasis.HV:
            return np.eye(2, dtype=np.complex128)
        return np.array([[1.0, 1.0], [1.0, -1.0]], dtype=np.complex128) / math.sqrt(2.0)


def diagonal_polarization() -> NDArray[np.complex128]:
    """|xi> = (|H> + |V>) / sqrt 2."""
    return np.array([1.0, 1.0], dtype=np.complex128) / math.sqrt(2.0)


@dataclass(frozen=True, slots=True, eq=False)
class JointUnitary:
    """
    System-environment coupling sum_k U_k (x) E_k, kept as blocks so Kraus
    operators can be read off without forming the full matrix.
    """

    blocks: tuple[tuple[TruncatedOperator, NDArray[np.complex128]], ...]

    def __post_init__(self) -> None:
        if not self.blocks:
            raise InvalidOperatorError("joint unitary needs at least one block")
        dim = self.blocks[0][0].dim
        env_dim = np.asarray(self.blocks[0][1]).shape[0]
        for system_op, env_op in self.blocks:
            system_op.require_dim(dim)
            if np.asarray(env_op).shape != (env_dim, env_dim):
                raise DimensionMismatchError("environment blocks must share one shape")

    @property
    def dim(self) -> int:
        return self.blocks[0][0].dim

    @property
    def env_dim(self) -> int:
        return int(np.asarray(self.blocks[0][1]).shape[0])

    def matrix(self) -> NDArray[np.complex128]:
        """Full operator on system (x) environment."""
        return sum(
            (np.kron(u.entries, np.asarray(e)) for u, e in self.blocks),
            start=np.zeros((self.dim * self.env_dim,) * 2, dtype=np.complex128),
        )

    @classmethod
    def uncoupled(cls, u: TruncatedOperator, env_dim: int = 2) -> JointUnitary:
        return cls(((u, np.eye(env_dim, dtype=np.complex128)),))

    @classmethod
    def polarization(cls, u: TruncatedOperator) -> JointUnitary:
        """U acts on the horizontal component only: U (x) |H><H| + 1 (x) |V><V|."""
        horizontal = np.diag([1.0, 0.0]).astype(np.complex128)
        vertical = np.diag([0.0, 1.0]).astype(np.complex128)
        return cls(((u, horizontal), (TruncatedOperator.identity(u.dim), vertical)))


def kraus_from_environment(
    joint_u: JointUnitary,
    env_state: ArrayLike,
    env_basis: PolarizationBasis | ArrayLike,
) -> KrausChannel:
    """
    Gamma_m = <zeta_m| U |xi> = sum_k U_k <zeta_m| E_k |xi>, dropping zero
    operators.

    Raises:
        CompletenessViolationError: If the operators do not sum to the
            identity (inconsistent coupling, state or basis)
    """
    xi = np.asarray(env_state, dtype=np.complex128)
    basis = (
        env_basis.vectors()
        if isinstance(env_basis, PolarizationBasis)
        else np.asarray(env_basis, dtype=np.complex128)
    )
    if xi.shape != (joint_u.env_dim,) or basis.shape[0] != joint_u.env_dim:
        raise DimensionMismatchError("environment state or basis has the wrong size")
    operators = []
    for m in range(basis.shape[1]):
        zeta = basis[:, m]
        gamma = sum(
            (u.entries * complex(zeta.conj() @ np.asarray(e) @ xi) for u, e in joint_u.blocks),
            start=np.zeros((joint_u.dim, joint_u.dim), dtype=np.complex128),
        )
        if np.linalg.norm(gamma) > DROP_KRAUS_NORM:
            operators.append(TruncatedOperator(gamma))
    if not operators:
        raise CompletenessViolationError("environment produced no Kraus operators")
    return KrausChannel(tuple(operators))


def _kraus_sum(phi: KrausChannel, x: NDArray[np.complex128]) -> NDArray[np.complex128]:
    stack = phi.stack
    return np.einsum("kab,bc,kdc->ad", stack, x, stack.conj())


def apply_channel(phi: KrausChannel, rho: DensityMatrix) -> DensityMatrix:
    """Phi(rho) = sum_m Gamma_m rho Gamma_m^dagger."""
    if phi.dim != rho.dim:
        raise DimensionMismatchError(f"channel dim {phi.dim} vs state dim {rho.dim}")
    return DensityMatrix(_kraus_sum(phi, rho.entries))


def operator_from_mask(mask: SampledField, dim: int) -> TruncatedOperator:
    """
    Mode-space matrix of a phase mask on the first dim modes, made exactly
    unitary by polar decomposition.
    """
    entries = process_from_grid(mask, dim - 1, mask.grid).entries
    unitary, _ = polar(entries)
    return TruncatedOperator(unitary)


def operator_from_term(term: OperatorTerm, dim: int) -> TruncatedOperator:
    match term.kind:
        case OperatorKind.IDENTITY:
            return TruncatedOperator.identity(dim)
        case OperatorKind.DISPLACEMENT:
            return displacement_operator(term.q0, dim)
        case OperatorKind.PHASE_MASK:
            assert term.mask is not None
            return operator_from_mask(term.mask, dim)
    raise InvalidOperatorError(f"unknown operator kind {term.kind}")


def build_channel(recipe: ChannelRecipe, dim: int | None = None) -> KrausChannel:
    """Assemble the channel named by a recipe at dimension dim (default recipe.dim)."""
    size = recipe.dim if dim is None else dim
    if recipe.polarization is not None:
        joint = JointUnitary.polarization(operator_from_term(recipe.polarization, size))
        return kraus_from_environment(joint, diagonal_polarization(), PolarizationBasis.HV)
    return KrausChannel(
        tuple(
            TruncatedOperator(math.sqrt(t.weight) * operator_from_term(t.operator, size).entries)
            for t in recipe.terms
        )
    )


# =============================================================================
# Two-point measurement statistics
# =============================================================================


def _check_projectors(projectors: Sequence[TruncatedOperator], dim: int) -> NDArray[np.complex128]:
    stack = np.stack([p.entries for p in projectors]) if projectors else None
    if stack is None or stack.shape[1:] != (dim, dim):
        raise DimensionMismatchError("final basis projectors do not match the channel")
    squared = np.einsum("mab,mbc->mac", stack, stack)
    if np.max(np.abs(squared - stack)) > PROJECTOR_TOL:
        raise InvalidOperatorError("final basis operators are not idempotent")
    return stack


def _clamp_probability(value: float) -> float:
    if value < JOINT_PROB_FLOOR:
        raise CompletenessViolationError(f"joint probability {value:.3e} is negative")
    return max(value, 0.0)


def joint_prob_matrix(
    phi: KrausChannel,
    rho0: DensityMatrix,
    final_basis: Sequence[TruncatedOperator],
) -> NDArray[np.float64]:
    """
    All p_{m,n} = Tr{Pi_m^F Phi[Pi_n^I rho0 Pi_n^I]} with Pi_n^I = |n><n|.

    Rows index the final projectors, columns the initial levels.
    """
    if phi.dim != rho0.dim:
        raise DimensionMismatchError(f"channel dim {phi.dim} vs state dim {rho0.dim}")
    projectors = _check_projectors(final_basis, phi.dim)
    stack = phi.stack
    # sum_k Gamma_k[:, n]^dagger Pi_m Gamma_k[:, n]
    weights = np.einsum("kan,mab,kbn->mn", stack.conj(), projectors, stack).real
    joint = weights * rho0.populations[None, :]
    lowest = float(joint.min())
    if lowest < JOINT_PROB_FLOOR:
        raise CompletenessViolationError(f"joint probability {lowest:.3e} is negative")
    return np.maximum(joint, 0.0)


def joint_prob_open(
    m: int,
    n: int,
    phi: KrausChannel,
    rho0: DensityMatrix,
    final_basis: Sequence[TruncatedOperator],
) -> float:
    """p_{m,n} = Tr{Pi_m^F Phi[Pi_n^I rho0 Pi_n^I]}, clamped at 0 above -1e-12."""
    if phi.dim != rho0.dim:
        raise DimensionMismatchError(f"channel dim {phi.dim} vs state dim {rho0.dim}")
    projector = _check_projectors([final_basis[m]], phi.dim)[0]
    initial = np.zeros((phi.dim, phi.dim), dtype=np.complex128)
    initial[n, n] = 1.0
    evolved = _kraus_sum(phi, initial @ rho0.entries @ initial)
    return _clamp_probability(float(np.trace(projector @ evolved).real))


def _diagonal_levels(h_initial: TruncatedOperator) -> NDArray[np.float64]:
    off = h_initial.entries - np.diag(np.diag(h_initial.entries))
    if np.max(np.abs(off), initial=0.0) > PROJECTOR_TOL:
        raise InvalidOperatorError("H_I must be diagonal in the truncated eigenbasis")
    return np.real(np.diag(h_initial.entries)).copy()


def fluctuation_average(
    phi: KrausChannel,
    rho0: DensityMatrix,
    beta_hw: float,
    h_initial: TruncatedOperator,
    h_final: TruncatedOperator,
) -> float:
    """<e^{-beta u}> = sum_{m,n} p_{m,n} e^{-beta (u_m^F - u_n^I)} by brute force."""
    levels_i = _diagonal_levels(h_initial)
    levels_f = eigenlevels(h_final)
    joint = joint_prob_matrix(phi, rho0, eigenprojectors(h_final))
    exponent = -beta_hw * (levels_f[:, None] - levels_i[None, :])
    return math.fsum((joint * np.exp(exponent)).ravel())


def workdist_open(
    phi: KrausChannel,
    rho0: DensityMatrix,
    h_initial: TruncatedOperator,
    h_final: TruncatedOperator,
) -> WorkDist:
    """
    Work distribution from the open joint probabilities; the level gaps must
    be integers (equally spaced spectra in units of hbar omega).
    """
    levels_i = _diagonal_levels(h_initial)
    levels_f = eigenlevels(h_final)
    joint = joint_prob_matrix(phi, rho0, eigenprojectors(h_final))
    work = levels_f[:, None] - levels_i[None, :]
    rounded = np.rint(work)
    if np.max(np.abs(work - rounded)) > INTEGER_WORK_TOL:
        raise InvalidOperatorError("work values are not integer multiples of hbar omega")
    d = rounded.astype(np.int64).ravel()
    d_min = int(d.min())
    probs = np.bincount(d - d_min, weights=joint.ravel())
    return WorkDist(d_min=d_min, probs=probs)


# =============================================================================
# Generalized characteristic function
# =============================================================================


def _check_dims(phi: KrausChannel, rho0: DensityMatrix, *ops: TruncatedOperator) -> None:
    if rho0.dim != phi.dim:
        raise DimensionMismatchError(f"channel dim {phi.dim} vs state dim {rho0.dim}")
    for op in ops:
        op.require_dim(phi.dim)


def _largest_level(h: TruncatedOperator) -> float:
    return float(np.max(np.abs(eigenlevels(h))))


def open_charfn(
    phi: KrausChannel,
    rho0: DensityMatrix,
    s: complex,
    h_initial: TruncatedOperator,
    h_final: TruncatedOperator,
) -> complex:
    """
    G(s) = Tr{W_F(s) Phi[M_I(rho0) V_I(s)]} with V_I = exp(-i s H_I) and
    W_F = exp(+i s H_F) (= V_F^dagger for real s, analytic in s).

    Raises:
        OverflowRiskError: If |Im s| times the largest level exceeds 700
    """
    _check_dims(phi, rho0, h_initial, h_final)
    s = complex(s)
    if s.imag != 0.0:
        exponent = abs(s.imag) * max(_largest_level(h_initial), _largest_level(h_final))
        if exponent > RAW_EXPONENT_LIMIT:
            raise OverflowRiskError(
                f"raw imaginary-time exponent {exponent:.1f} exceeds "
                f"{RAW_EXPONENT_LIMIT}; use gamma_value"
            )
    v_initial = exp_hermitian(h_initial, -1j * s)
    w_final = exp_hermitian(h_final, 1j * s)
    inner = _kraus_sum(phi, dephase(rho0, h_initial) @ v_initial)
    return complex(np.trace(w_final @ inner))


def gamma_value(
    phi: KrausChannel,
    rho0: DensityMatrix,
    beta_hw: float,
    h_initial: TruncatedOperator,
    h_final: TruncatedOperator,
) -> float:
    """
    gamma = Tr{e^{-beta H_F} Phi[M_I(rho0) e^{beta H_I}]}, the right-hand side
    of <e^{-beta u}> = gamma.

    M_I(rho0) e^{beta H_I} is formed as Q diag(exp(log r_n + beta u_n)) Q^dagger
    so the populations absorb the growth of e^{beta u_n}.

    Raises:
        NonRealGammaError: If the imaginary residue exceeds 1e-10
        OverflowRiskError: If a factored weight still overflows
    """
    _check_dims(phi, rho0, h_initial, h_final)
    if beta_hw <= 0:
        raise InvalidOperatorError(f"beta_hw must be positive, got {beta_hw}")
    levels, q = _eigh(h_initial)
    populations = np.real(np.einsum("an,ab,bn->n", q.conj(), rho0.entries, q))
    with np.errstate(divide="ignore"):
        log_weights = np.log(np.clip(populations, 0.0, None)) + beta_hw * levels
    if np.max(log_weights) > RAW_EXPONENT_LIMIT:
        raise OverflowRiskError("factored imaginary-time weights overflow")
    grown = (q * np.exp(log_weights)[None, :]) @ q.conj().T
    decayed = exp_hermitian(h_final, -beta_hw)
    value = complex(np.trace(decayed @ _kraus_sum(phi, grown)))
    if abs(value.imag) > GAMMA_RESIDUE_TOL:
        raise NonRealGammaError(f"gamma has imaginary residue {value.imag:.3e}")
    return value.real


# =============================================================================
# Ancilla readout
# =============================================================================


def ancilla_state(
    joint_u: JointUnitary,
    v: TruncatedOperator,
    v_prime: TruncatedOperator,
    rho_system: DensityMatrix,
    env_state: ArrayLike,
) -> NDArray[np.complex128]:
    """
    rho_A = 1/2 [1 + Re(Tr O) sigma_z + Im(Tr O) sigma_y] with
    O = (V' U)^dagger U V rho_SE, V = v (x) 1_E, V' = v_prime (x) 1_E and
    rho_SE = rho_system (x) |xi><xi|.
    """
    dim = joint_u.dim
    for op in (v, v_prime):
        op.require_dim(dim)
    if rho_system.dim != dim:
        raise DimensionMismatchError(f"system state dim {rho_system.dim} vs {dim}")
    xi = np.asarray(env_state, dtype=np.complex128)
    if xi.shape != (joint_u.env_dim,):
        raise DimensionMismatchError("environment state has the wrong size")
    identity_env = np.eye(joint_u.env_dim, dtype=np.complex128)
    big_u = joint_u.matrix()
    big_v = np.kron(v.entries, identity_env)
    big_v_prime = np.kron(v_prime.entries, identity_env)
    rho_se = np.kron(rho_system.entries, np.outer(xi, xi.conj()))
    trace = complex(np.trace((big_v_prime @ big_u).conj().T @ big_u @ big_v @ rho_se))
    return 0.5 * np.array(
        [
            [1.0 + trace.real, -1j * trace.imag],
            [1j * trace.imag, 1.0 - trace.real],
        ],
        dtype=np.complex128,
    )


def ancilla_expectations(rho_a: ArrayLike) -> tuple[float, float]:
    """(<sigma_z>, <sigma_y>) of a qubit state."""
    rho = np.asarray(rho_a, dtype=np.complex128)
    sigma_z = np.diag([1.0, -1.0]).astype(np.complex128)
    sigma_y = np.array([[0.0, -1j], [1j, 0.0]], dtype=np.complex128)
    return float(np.trace(rho @ sigma_z).real), float(np.trace(rho @ sigma_y).real)
