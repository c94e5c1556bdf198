"""Tests for the command-line application: parsing, exit codes and output."""

from __future__ import annotations

import json
from pathlib import Path

import pytest

import worklab.application.use_cases.run_acceptance_suite as suite_module
from worklab.application.dtos import GateResult
from worklab.entrypoints.cli.app import (
    EXIT_GATE,
    EXIT_INVALID,
    EXIT_OK,
    build_parser,
    main,
    scenario_dto,
)

# ============================================================================
# Helpers
# ============================================================================


def _error_line(captured: pytest.CaptureFixture[str]) -> dict[str, object]:
    """The JSON error object printed as the last stderr line."""
    last = captured.readouterr().err.strip().splitlines()[-1]
    return json.loads(last)  # type: ignore[no-any-return]


def _gate(name: str, passed: bool) -> list[GateResult]:
    return [GateResult(gate=name, passed=passed, value=0.0 if passed else 1.0, tolerance=0.5)]


@pytest.fixture
def scenario_file(tmp_path: Path) -> Path:
    """Write a scenario file with a relative channel path."""
    path = tmp_path / "scenario.cfg"
    path.write_text(
        "# cold kick\nq0 = 3.0\nbeta_hw = 1.0\nmode = open\nchannel = noise.spec\n",
        encoding="utf-8",
    )
    (tmp_path / "noise.spec").write_text(
        "dim = 12\nkraus = 0.5 * identity\nkraus = 0.5 * displacement(0.5)\n",
        encoding="utf-8",
    )
    return path


# ============================================================================
# Input assembly
# ============================================================================


class TestScenarioAssembly:
    """Tests for scenario files merged with flags."""

    def test_flags_override_file(self, scenario_file: Path) -> None:
        """Test that command-line flags win over file keys."""
        args = build_parser().parse_args(
            ["charfn", "--config", str(scenario_file), "--q0", "1.0"]
        )

        dto = scenario_dto(args)

        assert dto.q0 == 1.0
        assert dto.beta_hw == 1.0
        assert dto.mode == "open"

    def test_channel_resolved_next_to_file(self, scenario_file: Path) -> None:
        """Test that a relative channel path is read relative to the scenario file."""
        args = build_parser().parse_args(["open-charfn", "--config", str(scenario_file)])

        dto = scenario_dto(args)

        assert dto.channel == str(scenario_file.parent / "noise.spec")

    def test_unknown_command_exits(self) -> None:
        """Test argparse rejection of an unknown subcommand."""
        with pytest.raises(SystemExit) as exc_info:
            build_parser().parse_args(["simulate"])

        assert exc_info.value.code == 2


# ============================================================================
# Commands
# ============================================================================


class TestCommands:
    """Tests for successful command runs."""

    def test_charfn_writes_artifacts(
        self, tmp_path: Path, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """Test the analytic charfn command end to end."""
        code = main(["charfn", "--q0", "1", "--beta-hw", "1", "--out-dir", str(tmp_path)])

        assert code == EXIT_OK
        assert (tmp_path / "charfn.csv").read_text(encoding="utf-8").startswith("s,re_G,im_G\n")
        assert (tmp_path / "workdist.csv").exists()
        assert (tmp_path / "transitions.csv").read_text(encoding="utf-8").startswith(
            "m,n,re,im\n"
        )
        assert f"wrote {tmp_path / 'charfn.csv'}" in capsys.readouterr().out

    def test_workdist_prints_moments(
        self, tmp_path: Path, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """Test the mean work report."""
        code = main(["workdist", "--q0", "1", "--beta-hw", "1", "--out-dir", str(tmp_path)])

        out = capsys.readouterr().out
        assert code == EXIT_OK
        mean_line = next(line for line in out.splitlines() if line.startswith("mean work"))
        assert float(mean_line.split()[-1]) == pytest.approx(0.5, abs=1e-6)

    def test_open_charfn_from_scenario_file(
        self,
        scenario_file: Path,
        tmp_path: Path,
        capsys: pytest.CaptureFixture[str],
    ) -> None:
        """Test an open run with a channel spec beside the scenario."""
        code = main(
            ["open-charfn", "--config", str(scenario_file), "--out-dir", str(tmp_path / "out")]
        )

        out = capsys.readouterr().out
        assert code == EXIT_OK
        assert "gamma" in out
        assert (tmp_path / "out" / "charfn.csv").exists()

    def test_jarzynski_passes(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test the fluctuation relation report for q0 = 3, beta = 1."""
        code = main(["jarzynski", "--q0", "3", "--beta-hw", "1"])

        assert code == EXIT_OK
        assert "<exp(-beta W)>" in capsys.readouterr().out

    def test_units(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test the lens-chain geometry report."""
        code = main(["units", "--lambda-nm", "632.8", "--f-mm", "100", "--alpha", "1.5707963267948966"])

        out = capsys.readouterr().out
        assert code == EXIT_OK
        assert "z_alpha       100 mm" in out

    def test_verify_with_passing_gates(
        self,
        tmp_path: Path,
        monkeypatch: pytest.MonkeyPatch,
        capsys: pytest.CaptureFixture[str],
    ) -> None:
        """Test the verify report and its CSV."""
        for name in ("closed_form_gates", "frft_gates", "split_step_gates", "open_gates"):
            monkeypatch.setattr(suite_module, name, lambda name=name: _gate(name, True))
        monkeypatch.setattr(
            suite_module, "scenario_gates", lambda q0, beta_hw: _gate(f"scenario_{q0:g}", True)
        )

        code = main(["verify", "--out-dir", str(tmp_path)])

        out = capsys.readouterr().out
        assert code == EXIT_OK
        assert "suite fast: 6 gates, 0 failed" in out
        assert (tmp_path / "verify_fast.csv").exists()


# ============================================================================
# Exit codes
# ============================================================================


class TestExitCodes:
    """Tests for invalid input and numerical gate failures."""

    def test_out_of_range_flag_is_invalid(
        self, tmp_path: Path, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """Test exit 2 and the JSON error line for q0 > 10."""
        code = main(["charfn", "--q0", "20", "--beta-hw", "1", "--out-dir", str(tmp_path)])

        error = _error_line(capsys)
        assert code == EXIT_INVALID
        assert error["error"] == "ValidationError"
        assert error["exit_code"] == EXIT_INVALID

    def test_domain_validation_is_invalid(
        self, tmp_path: Path, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """Test exit 2 for a grid the domain rejects."""
        code = main(
            ["frft-verify", "--n-points", "65", "--half-width", "10", "--out-dir", str(tmp_path)]
        )

        assert code == EXIT_INVALID
        assert _error_line(capsys)["error"] == "InvalidGridError"

    def test_missing_scenario_file_is_invalid(
        self, tmp_path: Path, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """Test exit 2 for an unreadable --config."""
        code = main(["charfn", "--config", str(tmp_path / "absent.cfg")])

        assert code == EXIT_INVALID
        assert _error_line(capsys)["error"] == "InvalidScenarioError"

    def test_aliasing_is_gate_failure(
        self, tmp_path: Path, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """Test exit 3 when s_samples cannot resolve the work support."""
        code = main(
            ["charfn", "--q0", "1", "--beta-hw", "1", "--s-samples", "5", "--out-dir", str(tmp_path)]
        )

        error = _error_line(capsys)
        assert code == EXIT_GATE
        assert error["error"] == "AliasingError"

    def test_failed_gate_exits_three(
        self,
        tmp_path: Path,
        monkeypatch: pytest.MonkeyPatch,
        capsys: pytest.CaptureFixture[str],
    ) -> None:
        """Test that a failed acceptance gate is reported and exits 3."""
        for name in ("closed_form_gates", "frft_gates", "split_step_gates"):
            monkeypatch.setattr(suite_module, name, lambda name=name: _gate(name, True))
        monkeypatch.setattr(
            suite_module, "scenario_gates", lambda q0, beta_hw: _gate(f"scenario_{q0:g}", True)
        )
        monkeypatch.setattr(suite_module, "open_gates", lambda: _gate("open_gates", False))

        code = main(["verify", "--out-dir", str(tmp_path)])

        captured = capsys.readouterr()
        error = json.loads(captured.err.strip().splitlines()[-1])
        assert code == EXIT_GATE
        assert any(
            line.startswith("open_gates") and "FAIL" in line
            for line in captured.out.splitlines()
        )
        assert error["error"] == "AcceptanceGateError"
        assert "open_gates" in error["message"]

    def test_bad_environment_is_invalid(
        self, monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """Test exit 2 when WORKLAB_* settings fail validation."""
        monkeypatch.setenv("WORKLAB_THREADS", "0")

        code = main(["units", "--lambda-nm", "632.8", "--f-mm", "100", "--alpha", "1.0"])

        assert code == EXIT_INVALID
        assert _error_line(capsys)["error"] == "ValidationError"

    def test_hot_ensemble_above_mode_ceiling_is_invalid(
        self, tmp_path: Path, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """Test exit 2 before any amplitude is built when n_cut exceeds n_max."""
        code = main(
            ["charfn", "--q0", "1", "--beta-hw", "1e-4", "--out-dir", str(tmp_path)]
        )

        error = _error_line(capsys)
        assert code == EXIT_INVALID
        assert error["error"] == "InvalidScenarioError"
        assert "n_cut=184206" in str(error["message"])
        assert not (tmp_path / "charfn.csv").exists()

    def test_lowered_mode_ceiling_from_environment(
        self,
        tmp_path: Path,
        monkeypatch: pytest.MonkeyPatch,
        capsys: pytest.CaptureFixture[str],
    ) -> None:
        """Test that WORKLAB_N_MAX tightens the ceiling for closed runs."""
        monkeypatch.setenv("WORKLAB_N_MAX", "10")

        code = main(["charfn", "--q0", "1", "--beta-hw", "1", "--out-dir", str(tmp_path)])

        assert code == EXIT_INVALID
        assert "above the mode ceiling n_max=10" in str(_error_line(capsys)["message"])
