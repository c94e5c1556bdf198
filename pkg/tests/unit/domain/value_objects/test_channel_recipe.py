"""Tests for channel recipes."""

from __future__ import annotations

import math

import pytest

from worklab.domain.exceptions import InvalidChannelSpecError
from worklab.domain.value_objects import (
    ChannelRecipe,
    KrausTerm,
    OperatorKind,
    OperatorTerm,
)


class TestOperatorTerm:
    """Tests for OperatorTerm."""

    def test_displacement_label(self) -> None:
        """Test that displacement carries its strength."""
        term = OperatorTerm.displacement(1.5)

        assert term.kind is OperatorKind.DISPLACEMENT
        assert term.q0 == 1.5
        assert term.label == "displacement(1.5)"

    def test_phase_mask_requires_samples(self) -> None:
        """Test that a phase_mask term without samples is refused."""
        with pytest.raises(InvalidChannelSpecError) as exc_info:
            OperatorTerm(kind=OperatorKind.PHASE_MASK)

        assert "needs mask samples" in str(exc_info.value)

    def test_non_finite_strength_raises(self) -> None:
        """Test that the kick must be finite."""
        with pytest.raises(InvalidChannelSpecError):
            OperatorTerm.displacement(math.inf)


class TestChannelRecipe:
    """Tests for ChannelRecipe."""

    @pytest.mark.parametrize("weight", [0.0, -0.1, 1.5])
    def test_weight_out_of_range(self, weight: float) -> None:
        """Test that Kraus weights lie in (0, 1]."""
        with pytest.raises(InvalidChannelSpecError) as exc_info:
            KrausTerm(weight, OperatorTerm.identity())

        assert "(0, 1]" in str(exc_info.value)

    def test_needs_exactly_one_description(self) -> None:
        """Test that terms and polarization are mutually exclusive."""
        with pytest.raises(InvalidChannelSpecError):
            ChannelRecipe(dim=8)

        with pytest.raises(InvalidChannelSpecError):
            ChannelRecipe(
                dim=8,
                terms=(KrausTerm(1.0, OperatorTerm.identity()),),
                polarization=OperatorTerm.displacement(1.0),
            )

    def test_rejects_small_dimension(self) -> None:
        """Test that dim >= 2."""
        with pytest.raises(InvalidChannelSpecError):
            ChannelRecipe.unitary(OperatorTerm.identity(), dim=1)

    def test_with_dim_keeps_terms(self) -> None:
        """Test that re-dimensioning preserves the description."""
        recipe = ChannelRecipe.unitary(OperatorTerm.displacement(2.0), dim=16)

        resized = recipe.with_dim(32)

        assert resized.dim == 32
        assert resized.terms == recipe.terms

    def test_max_kick_covers_polarization(self) -> None:
        """Test max_kick over Kraus terms and the environment operator."""
        mixed = ChannelRecipe(
            dim=8,
            terms=(
                KrausTerm(0.5, OperatorTerm.displacement(-3.0)),
                KrausTerm(0.5, OperatorTerm.identity()),
            ),
        )
        polarized = ChannelRecipe(dim=8, polarization=OperatorTerm.displacement(2.0))

        assert mixed.max_kick == 3.0
        assert polarized.max_kick == 2.0
