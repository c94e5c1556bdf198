"""Unit tests for RunAcceptanceSuiteUseCase.

Gate groups are replaced with cheap stand-ins to test planning, ordering
and failure handling; the real suites run under the slow marker.
"""

from __future__ import annotations

import math

import pytest

import worklab.application.use_cases.run_acceptance_suite as suite_module
from worklab.application.dtos import GateResult
from worklab.application.use_cases import RunAcceptanceSuiteUseCase
from worklab.application.use_cases.requests import VerifyRequest, VerifySuite
from worklab.domain.exceptions import BasisDeficitError
from worklab.infrastructure.adapters import FixedClock, InMemoryResultSink

# ============================================================================
# Fixtures
# ============================================================================


def _ok(name: str) -> list[GateResult]:
    return [GateResult(gate=name, passed=True, value=0.0, tolerance=1e-9)]


@pytest.fixture
def stub_gates(monkeypatch: pytest.MonkeyPatch) -> None:
    """Replace every gate group with a single passing gate."""
    monkeypatch.setattr(suite_module, "closed_form_gates", lambda: _ok("closed_form"))
    monkeypatch.setattr(
        suite_module, "scenario_gates", lambda q0, beta_hw: _ok(f"scenario_{q0:g}_{beta_hw:g}")
    )
    monkeypatch.setattr(suite_module, "frft_gates", lambda: _ok("frft"))
    monkeypatch.setattr(suite_module, "split_step_gates", lambda: _ok("split_step"))
    monkeypatch.setattr(suite_module, "open_gates", lambda: _ok("open"))
    monkeypatch.setattr(
        suite_module,
        "interferometer_gates",
        lambda q0, beta_hw, workers: _ok(f"interferometer_{q0:g}_{beta_hw:g}"),
    )
    monkeypatch.setattr(suite_module, "stress_gates", lambda: _ok("stress"))


# ============================================================================
# Planning and reporting
# ============================================================================


@pytest.mark.usefixtures("stub_gates")
class TestRunAcceptanceSuiteUseCase:
    """Tests for suite planning, export and failure handling."""

    def test_fast_suite_gate_order(
        self, clock: FixedClock, sink: InMemoryResultSink
    ) -> None:
        """Test that gates come out in plan order."""
        # Act
        report = RunAcceptanceSuiteUseCase(clock).execute(VerifyRequest(), sink)

        # Assert
        assert [g.gate for g in report.gates] == [
            "closed_form",
            "scenario_1_0.1",
            "scenario_3_1",
            "frft",
            "split_step",
            "open",
        ]
        assert report.passed
        assert report.failures == ()

    def test_full_suite_adds_interferometer_runs(
        self, clock: FixedClock, sink: InMemoryResultSink
    ) -> None:
        """Test the end-to-end groups of the full suite."""
        request = VerifyRequest(suite=VerifySuite.FULL, workers=2)

        report = RunAcceptanceSuiteUseCase(clock).execute(request, sink)

        names = [g.gate for g in report.gates]
        assert names[-2:] == ["interferometer_1_0.1", "interferometer_3_1"]
        assert "stress" not in names

    def test_stress_suite_adds_stress_group(
        self, clock: FixedClock, sink: InMemoryResultSink
    ) -> None:
        """Test the high-order group of the stress suite."""
        report = RunAcceptanceSuiteUseCase(clock).execute(
            VerifyRequest(suite=VerifySuite.STRESS), sink
        )

        assert report.gates[-1].gate == "stress"
        assert report.suite is VerifySuite.STRESS

    def test_elapsed_time_comes_from_clock(
        self, clock: FixedClock, sink: InMemoryResultSink
    ) -> None:
        """Test that two clock readings bracket the run."""
        report = RunAcceptanceSuiteUseCase(clock).execute(VerifyRequest(), sink)

        assert report.elapsed_seconds == 2.0

    def test_exports_gate_table(self, clock: FixedClock, sink: InMemoryResultSink) -> None:
        """Test the verify_<suite>.csv artifact."""
        report = RunAcceptanceSuiteUseCase(clock).execute(VerifyRequest(), sink)

        assert report.artifact == "memory://verify_fast.csv"
        assert sink.tables["verify_fast.csv"][0] == ["gate", "passed", "value", "tolerance"]
        assert sink.rows("verify_fast.csv")[0] == [
            "closed_form",
            "true",
            "0",
            "1.0000000000000001e-09",
        ]

    def test_raising_group_is_recorded_as_failure(
        self,
        clock: FixedClock,
        sink: InMemoryResultSink,
        monkeypatch: pytest.MonkeyPatch,
    ) -> None:
        """Test that a domain error fails its group with value inf."""

        # Arrange
        def broken() -> list[GateResult]:
            raise BasisDeficitError("mode basis lost 1e-3 of the power")

        monkeypatch.setattr(suite_module, "open_gates", broken)

        # Act
        report = RunAcceptanceSuiteUseCase(clock).execute(VerifyRequest(), sink)

        # Assert
        assert not report.passed
        (failure,) = report.failures
        assert failure.gate == "open"
        assert failure.value == math.inf
        assert sink.rows("verify_fast.csv")[-1] == ["open", "false", "inf", "0"]


# ============================================================================
# Real gates
# ============================================================================


class TestGateGroups:
    """Tests for individual gate groups that run quickly."""

    def test_closed_form_gate_passes(self) -> None:
        """Test closed form against quadrature for the reference kicks."""
        (gate,) = suite_module.closed_form_gates()

        assert gate.passed

    def test_scenario_gates_pass(self) -> None:
        """Test unitarity, duality and fluctuation relations at q0 = 1, beta = 0.1."""
        gates = suite_module.scenario_gates(1.0, 0.1)

        assert len(gates) == 7
        assert all(g.passed for g in gates), [g for g in gates if not g.passed]

    def test_frft_gates_pass(self) -> None:
        """Test eigenphases and the lens chain for modes 0..10."""
        gates = suite_module.frft_gates()

        assert [g.gate for g in gates] == [
            "frft_spectral_eigenphase",
            "frft_optical_vs_spectral",
            "frft_quarter_period_distance",
        ]
        assert all(g.passed for g in gates), [g for g in gates if not g.passed]

    def test_split_step_gates_pass(self) -> None:
        """Test split-step fidelity and second-order convergence in the harmonic channel."""
        gates = suite_module.split_step_gates()

        assert len(gates) == 3
        assert all(g.passed for g in gates), [g for g in gates if not g.passed]

    def test_split_step_error_falls_with_steps(self) -> None:
        """Test that halving the step lowers the eigenphase error of every mode."""
        coarse = suite_module._split_step_errors(600)
        fine = suite_module._split_step_errors(1200)

        assert all(f[1] < c[1] for c, f in zip(coarse, fine, strict=True))

    def test_open_gates_pass(self) -> None:
        """Test the open-dynamics consistency gates."""
        gates = suite_module.open_gates()

        assert all(g.passed for g in gates), [g for g in gates if not g.passed]


@pytest.mark.slow
class TestSuites:
    """Full acceptance suites."""

    @pytest.mark.parametrize("suite", list(VerifySuite))
    def test_suite_passes(
        self, suite: VerifySuite, clock: FixedClock, sink: InMemoryResultSink
    ) -> None:
        """Test every gate of the suite."""
        report = RunAcceptanceSuiteUseCase(clock).execute(
            VerifyRequest(suite=suite, workers=4), sink
        )

        assert report.passed, report.failures
