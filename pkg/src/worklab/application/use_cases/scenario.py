"""Scenario assembly shared by the use cases."""

from __future__ import annotations

from dataclasses import dataclass

from worklab.application.use_cases.requests import FinalHamiltonian, ScenarioRequest
from worklab.domain.entities import (
    REAL_PART,
    DensityMatrix,
    InterferometerConfig,
    KrausChannel,
    ThermalEnsemble,
    TransitionMatrix,
    TruncatedOperator,
)
from worklab.domain.physics.openmaps import (
    build_channel,
    displaced_hamiltonian,
    number_hamiltonian,
    thermal_state,
)
from worklab.domain.exceptions import InvalidScenarioError, TruncationFailureError
from worklab.domain.physics.thermo import cutoff_level, extended_ensemble, thermal_weights
from worklab.domain.physics.transitions import build_matrix
from worklab.domain.value_objects import (
    ChannelRecipe,
    GridSpec,
    OperatorTerm,
    PhaseMask,
)


@dataclass(frozen=True, slots=True)
class ClosedScenario:
    """Thermal ensemble and displacement amplitudes of a closed run."""

    ensemble: ThermalEnsemble
    transitions: TransitionMatrix


@dataclass(frozen=True, slots=True)
class OpenScenario:
    """Everything open_charfn and gamma_value need at one truncation."""

    channel: KrausChannel
    rho0: DensityMatrix
    h_initial: TruncatedOperator
    h_final: TruncatedOperator
    beta_hw: float

    @property
    def dim(self) -> int:
        return self.channel.dim


def closed_scenario(request: ScenarioRequest) -> ClosedScenario:
    """
    Raises:
        InvalidScenarioError: If the thermal cutoff for beta_hw and tail_tol
            lies above the mode ceiling n_max
    """
    n_cut = cutoff_level(request.beta_hw, request.tail_tol)
    if n_cut > request.n_max:
        raise InvalidScenarioError(
            f"beta_hw={request.beta_hw} with tail_tol={request.tail_tol} needs "
            f"n_cut={n_cut}, above the mode ceiling n_max={request.n_max}"
        )
    ensemble = thermal_weights(request.beta_hw, request.tail_tol)
    transitions = build_matrix(request.q0, ensemble.n_cut, request.unitarity_tol)
    return ClosedScenario(ensemble=ensemble, transitions=transitions)


def jarzynski_scenario(request: ScenarioRequest) -> ClosedScenario:
    """
    Closed scenario whose ensemble reaches every row of the base amplitude
    block, for sums weighted by e^{+beta n}.

    With |c_mn| = |c_nm| each row m <= n_cut then loses at most
    unitarity_tol to the missing columns, and the rows above n_cut carry
    at most tail_tol of Boltzmann weight, so <e^{-beta W}> is accurate to
    about unitarity_tol + tail_tol. The extension stops at the mode ceiling
    n_max; rows above it carry at most e^{-beta (n_max + 1)} of weight.
    """
    base = closed_scenario(request)
    reach = max(base.ensemble.n_cut, min(base.transitions.m_max, request.n_max))
    ensemble = extended_ensemble(base.ensemble, reach)
    transitions = build_matrix(request.q0, ensemble.n_cut, request.unitarity_tol)
    return ClosedScenario(ensemble=ensemble, transitions=transitions)


def prism_config(request: ScenarioRequest, scenario: ClosedScenario) -> InterferometerConfig:
    """
    The displacement as a physical phase mask e^{-i q0 x} on a grid that
    holds every final mode the amplitudes reach.

    Raises:
        TruncationFailureError: If the amplitudes reach modes above n_max
    """
    n_basis = scenario.transitions.m_max
    if n_basis > request.n_max:
        raise TruncationFailureError(
            f"amplitudes reach mode {n_basis}, above the mode ceiling n_max={request.n_max}"
        )
    grid = request.grid or GridSpec.covering(n_basis, request.q0)
    return InterferometerConfig(
        process=PhaseMask.kick(grid, request.q0),
        phase_offset=REAL_PART,
        n_basis=n_basis,
    )


def channel_recipe(request: ScenarioRequest) -> ChannelRecipe:
    """
    The requested channel, or the one that reproduces the closed quench:
    the unitary displacement read in the initial eigenbasis, or the
    identity (sudden quench) read in the displaced eigenbasis.
    """
    if request.channel is not None:
        return request.channel
    if request.final_hamiltonian is FinalHamiltonian.DISPLACED:
        return ChannelRecipe.unitary(OperatorTerm.identity(), request.open_dim)
    return ChannelRecipe.unitary(OperatorTerm.displacement(request.q0), request.open_dim)


def open_scenario(request: ScenarioRequest, dim: int | None = None) -> OpenScenario:
    """Open-dynamics inputs at dimension dim (default: the recipe's)."""
    recipe = channel_recipe(request)
    size = recipe.dim if dim is None else dim
    h_final = (
        displaced_hamiltonian(request.q0, size)
        if request.final_hamiltonian is FinalHamiltonian.DISPLACED
        else number_hamiltonian(size)
    )
    return OpenScenario(
        channel=build_channel(recipe, size),
        rho0=thermal_state(request.beta_hw, size),
        h_initial=number_hamiltonian(size),
        h_final=h_final,
        beta_hw=request.beta_hw,
    )
