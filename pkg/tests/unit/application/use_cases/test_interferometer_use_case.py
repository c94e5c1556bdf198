"""Unit tests for RunInterferometerUseCase and interferometric charfn mode."""

from __future__ import annotations

import numpy as np
import pytest

from worklab.application.use_cases import ComputeCharfnUseCase, RunInterferometerUseCase
from worklab.application.use_cases.requests import ComputeMode, ScenarioRequest
from worklab.infrastructure.adapters import InMemoryResultSink

# ============================================================================
# Fixtures
# ============================================================================


@pytest.fixture
def cold_request() -> ScenarioRequest:
    """Provide a cold scenario so few thermal levels are simulated."""
    return ScenarioRequest(q0=1.0, beta_hw=3.0, mode=ComputeMode.INTERFEROMETRIC)


# ============================================================================
# RunInterferometerUseCase
# ============================================================================


class TestRunInterferometerUseCase:
    """Tests for the simulated optics pipeline."""

    def test_reconstructs_analytic_charfn(
        self, cold_request: ScenarioRequest, sink: InMemoryResultSink
    ) -> None:
        """Test that the detector traces give back the closed-form G(s)."""
        # Arrange
        analytic = ComputeCharfnUseCase().execute(
            ScenarioRequest(q0=1.0, beta_hw=3.0), InMemoryResultSink()
        )

        # Act
        result = RunInterferometerUseCase().execute(cold_request, sink)

        # Assert
        np.testing.assert_allclose(result.trace.s_samples, analytic.trace.s_samples)
        np.testing.assert_allclose(result.trace.values, analytic.trace.values, atol=1e-6)
        np.testing.assert_allclose(result.dist.probs, analytic.dist.probs, atol=1e-6)
        assert result.symmetry_defect < 1e-6

    def test_phase_settings(self, cold_request: ScenarioRequest, sink: InMemoryResultSink) -> None:
        """Test that the two traces use the 0 and pi/2 PZT settings."""
        result = RunInterferometerUseCase().execute(cold_request, sink)

        assert result.re_trace.theta == 0.0
        assert result.im_trace.theta == pytest.approx(np.pi / 2)
        assert result.re_trace.offset == pytest.approx(0.5, abs=1e-8)

    def test_writes_all_tables(
        self, cold_request: ScenarioRequest, sink: InMemoryResultSink
    ) -> None:
        """Test the trace, charfn, workdist, amplitude and field artifacts."""
        result = RunInterferometerUseCase().execute(cold_request, sink)

        assert set(sink.tables) == {
            "interf_re.csv",
            "interf_im.csv",
            "charfn.csv",
            "workdist.csv",
            "transitions.csv",
            "prism_field.csv",
        }
        assert len(result.artifacts) == 6
        assert sink.tables["transitions.csv"][0] == ["m", "n", "re", "im"]
        assert sink.tables["prism_field.csv"][0] == ["x", "re", "im"]
        assert sink.tables["interf_re.csv"][0] == ["s", "out0", "out1", "offset"]
        assert len(sink.rows("interf_im.csv")) == len(result.trace)

    def test_charfn_dispatches_interferometric_mode(
        self, cold_request: ScenarioRequest, sink: InMemoryResultSink
    ) -> None:
        """Test that ComputeCharfnUseCase routes through the optics."""
        result = ComputeCharfnUseCase().execute(cold_request, sink)

        assert result.mode is ComputeMode.INTERFEROMETRIC
        assert "interf_re.csv" in sink.tables
        assert result.trace.values[0] == pytest.approx(1.0, abs=1e-6)
