"""Tests for SampledField and the optical element value objects."""

from __future__ import annotations

import math

import numpy as np
import pytest

from worklab.domain.exceptions import (
    GridMismatchError,
    InvalidElementError,
    InvalidGridError,
    NonUnitaryMaskError,
    ZeroFocalLengthError,
)
from worklab.domain.value_objects import (
    FreeSpace,
    GridSpec,
    IndexChannel,
    PhaseMask,
    SampledField,
    ThinLens,
)

# =============================================================================
# Fixtures
# =============================================================================


@pytest.fixture
def grid() -> GridSpec:
    """Small grid shared by the element tests."""
    return GridSpec(n_points=128, half_width=10.0)


# =============================================================================
# SampledField
# =============================================================================


class TestSampledField:
    """Tests for SampledField value object."""

    def test_values_are_read_only(self, grid: GridSpec) -> None:
        """Test that stored samples cannot be mutated."""
        field = SampledField.from_function(grid, np.exp(-grid.x**2))

        with pytest.raises(ValueError):
            field.values[0] = 1.0

    def test_wrong_shape_raises(self, grid: GridSpec) -> None:
        """Test that sample count must match the grid."""
        with pytest.raises(InvalidGridError) as exc_info:
            SampledField(grid=grid, values=np.zeros(10))

        assert "128 samples" in str(exc_info.value)

    def test_non_finite_values_raise(self, grid: GridSpec) -> None:
        """Test that NaN samples are rejected."""
        values = np.zeros(grid.n_points)
        values[3] = np.nan

        with pytest.raises(InvalidGridError):
            SampledField(grid=grid, values=values)

    def test_gaussian_power(self, grid: GridSpec) -> None:
        """Test power of the normalized ground-state Gaussian."""
        field = SampledField.from_function(
            grid, lambda x: np.pi**-0.25 * np.exp(-(x**2) / 2)
        )

        assert field.power == pytest.approx(1.0, abs=1e-12)

    def test_require_grid_mismatch(self, grid: GridSpec) -> None:
        """Test that fields on different grids are refused."""
        field = SampledField.from_function(grid, 1.0)
        other = GridSpec(n_points=256, half_width=10.0)

        with pytest.raises(GridMismatchError):
            field.require_grid(other)


# =============================================================================
# Elements
# =============================================================================


class TestElements:
    """Tests for FreeSpace, ThinLens, PhaseMask and IndexChannel."""

    def test_negative_free_space_raises(self) -> None:
        """Test that propagation lengths are non-negative."""
        with pytest.raises(InvalidElementError):
            FreeSpace(-1.0)

    def test_zero_focal_length_raises(self) -> None:
        """Test that f = 0 raises ZeroFocalLengthError."""
        with pytest.raises(ZeroFocalLengthError):
            ThinLens(0.0)

    def test_infinite_focal_length_is_identity(self) -> None:
        """Test the flag value f = inf."""
        assert ThinLens(math.inf).is_identity
        assert not ThinLens(2.0).is_identity

    def test_kick_mask_has_unit_modulus(self, grid: GridSpec) -> None:
        """Test that the prism mask is e^{-i q0 x}."""
        mask = PhaseMask.kick(grid, 1.5)

        np.testing.assert_allclose(mask.profile.values, np.exp(-1.5j * grid.x))

    def test_non_unit_mask_raises(self, grid: GridSpec) -> None:
        """Test that amplitude masks are refused."""
        field = SampledField.from_function(grid, 0.5)

        with pytest.raises(NonUnitaryMaskError) as exc_info:
            PhaseMask(field)

        assert "unit modulus" in str(exc_info.value)

    def test_index_channel_step(self, grid: GridSpec) -> None:
        """Test split-step size of a harmonic channel."""
        channel = IndexChannel.harmonic(grid, length=1.0, steps=1000)

        assert channel.dz == pytest.approx(1e-3)

    def test_index_channel_rejects_zero_steps(self, grid: GridSpec) -> None:
        """Test that at least one step is required."""
        with pytest.raises(InvalidElementError) as exc_info:
            IndexChannel.empty(grid, length=1.0, steps=0)

        assert "steps must be >= 1" in str(exc_info.value)
