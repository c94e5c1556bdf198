"""Pydantic DTOs validating CLI flags and scenario files."""

from __future__ import annotations

import math
from typing import Literal, Self

from pydantic import BaseModel, ConfigDict, Field, model_validator


class GridOverrideDTO(BaseModel):
    """Optional explicit transverse grid; both fields or neither."""

    model_config = ConfigDict(extra="forbid")

    n_points: int | None = Field(default=None, ge=64, description="Even sample count")
    half_width: float | None = Field(default=None, gt=0.0, description="Grid half-width")

    @model_validator(mode="after")
    def _both_or_neither(self) -> Self:
        if (self.n_points is None) != (self.half_width is None):
            raise ValueError("n_points and half_width must be given together")
        return self


class ScenarioConfigDTO(GridOverrideDTO):
    """One displacement-quench scenario (flags override file keys)."""

    q0: float = Field(ge=0.0, le=10.0, description="Kick strength in oscillator units")
    beta_hw: float = Field(gt=0.0, description="Inverse temperature times hbar omega")
    s_samples: int | None = Field(default=None, ge=3)
    mode: Literal["analytic", "interferometric", "open"] = "analytic"
    channel: str | None = Field(default=None, description="Channel spec file (open mode)")
    out_dir: str | None = None
    tail_tol: float | None = Field(default=None, gt=0.0, lt=1.0)
    unitarity_tol: float | None = Field(default=None, gt=0.0, lt=1.0)
    open_dim: int | None = Field(default=None, ge=2)
    final_hamiltonian: Literal["initial", "displaced"] = "initial"

    model_config = {
        "extra": "forbid",
        "json_schema_extra": {
            "examples": [
                {"q0": 1.0, "beta_hw": 0.1, "mode": "analytic"},
                {"q0": 3.0, "beta_hw": 1.0, "mode": "interferometric", "s_samples": 256},
            ]
        },
    }


class FrftVerifyDTO(GridOverrideDTO):
    n_max: int = Field(default=10, ge=0, description="Highest mode checked")
    out_dir: str | None = None


class UnitsDTO(BaseModel):
    model_config = ConfigDict(extra="forbid")

    lambda_nm: float = Field(gt=0.0, description="Wavelength in nanometres")
    f_mm: float = Field(gt=0.0, description="Focal length in millimetres")
    alpha: float = Field(gt=0.0, lt=2.0 * math.pi, description="FRFT order in radians")


class VerifyDTO(BaseModel):
    model_config = ConfigDict(extra="forbid")

    suite: Literal["fast", "full", "stress"] = "fast"
    out_dir: str | None = None
