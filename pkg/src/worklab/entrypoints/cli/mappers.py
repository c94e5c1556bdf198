"""Mappers from validated CLI DTOs to use-case requests."""

from __future__ import annotations

from worklab.application.use_cases.requests import (
    ComputeMode,
    FinalHamiltonian,
    FrftVerifyRequest,
    ScenarioRequest,
    UnitsRequest,
    VerifyRequest,
    VerifySuite,
)
from worklab.config import Settings
from worklab.domain.value_objects import ChannelRecipe, GridSpec
from worklab.entrypoints.cli.dtos import (
    FrftVerifyDTO,
    GridOverrideDTO,
    ScenarioConfigDTO,
    UnitsDTO,
    VerifyDTO,
)


def _grid(dto: GridOverrideDTO) -> GridSpec | None:
    if dto.n_points is None or dto.half_width is None:
        return None
    return GridSpec(n_points=dto.n_points, half_width=dto.half_width)


class ScenarioMapper:
    """Maps scenario DTOs to requests, filling gaps from Settings."""

    @staticmethod
    def to_request(
        dto: ScenarioConfigDTO,
        settings: Settings,
        channel: ChannelRecipe | None = None,
        mode: ComputeMode | None = None,
    ) -> ScenarioRequest:
        """
        Convert a validated scenario to a request.

        Handles:
        - str -> enum (mode, final Hamiltonian); a command may force the mode
        - grid override fields -> GridSpec
        - unset tolerances and dimensions -> Settings defaults
        - Settings.n_max -> the mode ceiling
        """
        return ScenarioRequest(
            q0=dto.q0,
            beta_hw=dto.beta_hw,
            s_samples=dto.s_samples,
            mode=mode or ComputeMode(dto.mode),
            tail_tol=dto.tail_tol if dto.tail_tol is not None else settings.tail_tol,
            unitarity_tol=(
                dto.unitarity_tol if dto.unitarity_tol is not None else settings.unitarity_tol
            ),
            grid=_grid(dto),
            channel=channel,
            open_dim=dto.open_dim if dto.open_dim is not None else settings.open_dim,
            final_hamiltonian=FinalHamiltonian(dto.final_hamiltonian),
            workdist_floor=settings.workdist_floor,
            workers=settings.threads,
            n_max=settings.n_max,
        )


class FrftVerifyMapper:
    @staticmethod
    def to_request(dto: FrftVerifyDTO, settings: Settings) -> FrftVerifyRequest:
        grid = _grid(dto)
        if grid is None:
            return FrftVerifyRequest(
                n_max=dto.n_max, workers=settings.threads, mode_ceiling=settings.n_max
            )
        return FrftVerifyRequest(
            n_max=dto.n_max, grid=grid, workers=settings.threads, mode_ceiling=settings.n_max
        )


class UnitsMapper:
    @staticmethod
    def to_request(dto: UnitsDTO) -> UnitsRequest:
        return UnitsRequest(lambda_nm=dto.lambda_nm, f_mm=dto.f_mm, alpha=dto.alpha)


class VerifyMapper:
    @staticmethod
    def to_request(dto: VerifyDTO, settings: Settings) -> VerifyRequest:
        return VerifyRequest(suite=VerifySuite(dto.suite), workers=settings.threads)
