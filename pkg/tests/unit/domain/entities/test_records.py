"""Tests for ThermalEnsemble, TransitionMatrix, CharFnTrace and WorkDist."""

from __future__ import annotations

import numpy as np
import pytest

from worklab.domain.entities import (
    CharFnTrace,
    IntensityTrace,
    ThermalEnsemble,
    TransitionMatrix,
    WorkDist,
)
from worklab.domain.exceptions import (
    AliasingError,
    DegenerateTemperatureError,
    DimensionMismatchError,
    InvalidOperatorError,
    NegativeProbabilityError,
)
from worklab.domain.value_objects import Provenance


class TestThermalEnsemble:
    """Tests for ThermalEnsemble entity."""

    def test_weight_count_must_match_cutoff(self) -> None:
        """Test that n_cut + 1 weights are required."""
        with pytest.raises(DimensionMismatchError) as exc_info:
            ThermalEnsemble(
                beta_hw=1.0,
                weights=np.array([0.5, 0.5]),
                n_cut=2,
                log_partition=0.0,
                renormalization=1.0,
                tail_tol=1e-8,
            )

        assert "expected 3 weights" in str(exc_info.value)

    def test_rejects_non_positive_beta(self) -> None:
        """Test that beta_hw <= 0 raises."""
        with pytest.raises(DegenerateTemperatureError):
            ThermalEnsemble(
                beta_hw=0.0,
                weights=np.array([1.0]),
                n_cut=0,
                log_partition=0.0,
                renormalization=1.0,
                tail_tol=1e-8,
            )

    def test_ground_state_only(self) -> None:
        """Test the single-level ensemble flag."""
        ensemble = ThermalEnsemble(
            beta_hw=50.0,
            weights=np.array([1.0]),
            n_cut=0,
            log_partition=-25.0,
            renormalization=1.0,
            tail_tol=1e-8,
        )

        assert ensemble.ground_state_only
        assert ensemble.levels == 1


class TestTransitionMatrix:
    """Tests for TransitionMatrix entity."""

    def test_identity_has_no_deficit(self) -> None:
        """Test deficits of a unitary block."""
        matrix = TransitionMatrix(
            q0=0.0, entries=np.eye(4), provenance=Provenance.CLOSED_FORM
        )

        assert matrix.m_max == 3
        assert matrix.n_max == 3
        assert matrix.max_deficit == 0.0
        assert matrix.covers(3)
        assert not matrix.covers(4)

    def test_rows_are_column_major(self) -> None:
        """Test that rows iterate m fastest."""
        entries = np.array([[1.0, 0.0], [0.0, 1j], [0.0, 0.0]])
        matrix = TransitionMatrix(q0=None, entries=entries, provenance=Provenance.GRID_PROCESS)

        rows = list(matrix.to_rows())

        assert rows[0] == (0, 0, 1.0, 0.0)
        assert rows[4] == (1, 1, 0.0, 1.0)
        assert len(rows) == 6

    def test_fewer_rows_than_columns_raises(self) -> None:
        """Test that m_max >= n_max is enforced."""
        with pytest.raises(DimensionMismatchError):
            TransitionMatrix(q0=1.0, entries=np.ones((2, 3)), provenance=Provenance.QUADRATURE)

    def test_non_finite_entries_raise(self) -> None:
        """Test that NaN amplitudes are refused."""
        with pytest.raises(InvalidOperatorError):
            TransitionMatrix(
                q0=1.0, entries=np.full((2, 2), np.nan), provenance=Provenance.QUADRATURE
            )


class TestCharFnTrace:
    """Tests for CharFnTrace entity."""

    def test_span_and_rows(self) -> None:
        """Test support span and CSV rows."""
        trace = CharFnTrace(
            s_samples=np.array([0.0, 1.0, 2.0]),
            values=np.array([1.0, 0.5j, -0.5]),
            d_min=-1,
            d_max=1,
        )

        assert trace.span == 3
        assert len(trace) == 3
        assert trace.to_rows()[1] == (1.0, 0.0, 0.5)

    def test_samples_outside_period_raise(self) -> None:
        """Test that s must lie in [0, 2 pi)."""
        with pytest.raises(AliasingError) as exc_info:
            CharFnTrace(
                s_samples=np.array([0.0, 2 * np.pi]),
                values=np.ones(2),
                d_min=0,
                d_max=1,
            )

        assert "[0, 2pi)" in str(exc_info.value)

    def test_empty_support_raises(self) -> None:
        """Test that d_min > d_max is refused."""
        with pytest.raises(DimensionMismatchError):
            CharFnTrace(s_samples=np.array([0.0]), values=np.ones(1), d_min=2, d_max=1)


class TestWorkDist:
    """Tests for WorkDist entity."""

    def test_tiny_negatives_are_clamped(self) -> None:
        """Test that entries in [-1e-12, 0) become 0."""
        dist = WorkDist(d_min=-1, probs=np.array([-5e-13, 0.4, 0.6]))

        assert dist.prob(-1) == 0.0
        assert dist.total == pytest.approx(1.0)

    def test_negative_probability_raises(self) -> None:
        """Test that clearly negative entries raise."""
        with pytest.raises(NegativeProbabilityError) as exc_info:
            WorkDist(d_min=0, probs=np.array([1.0, -1e-6]))

        assert "below floor" in str(exc_info.value)

    def test_prob_outside_support_is_zero(self) -> None:
        """Test P(d) outside [d_min, d_max]."""
        dist = WorkDist(d_min=2, probs=np.array([0.25, 0.75]))

        assert dist.d_max == 3
        assert dist.prob(1) == 0.0
        assert dist.prob(4) == 0.0
        np.testing.assert_array_equal(dist.support, [2, 3])

    def test_trimmed_drops_edges(self) -> None:
        """Test that edges at or below the floor are removed."""
        dist = WorkDist(d_min=-2, probs=np.array([1e-20, 0.5, 0.0, 0.5, 1e-15]))

        trimmed = dist.trimmed(1e-12)

        assert trimmed.d_min == -1
        assert trimmed.to_rows() == [(-1, 0.5), (0, 0.0), (1, 0.5)]


class TestIntensityTrace:
    """Tests for IntensityTrace entity."""

    def test_negative_power_raises(self) -> None:
        """Test that detected power cannot be negative."""
        with pytest.raises(NegativeProbabilityError):
            IntensityTrace(
                s_samples=np.array([0.0]),
                intensity_out0=np.array([-1e-6]),
                intensity_out1=np.array([1.0]),
                offset=0.5,
                theta=0.0,
                interference_scale=0.5,
                input_power=1.0,
                d_min=0,
                d_max=0,
            )

    def test_total_power(self) -> None:
        """Test out0 + out1 per sample."""
        trace = IntensityTrace(
            s_samples=np.array([0.0, 1.0]),
            intensity_out0=np.array([0.75, 0.5]),
            intensity_out1=np.array([0.25, 0.5]),
            offset=0.5,
            theta=0.0,
            interference_scale=0.5,
            input_power=1.0,
            d_min=0,
            d_max=0,
        )

        np.testing.assert_allclose(trace.total_power, [1.0, 1.0])
        assert trace.to_rows()[0] == (0.0, 0.75, 0.25, 0.5)
