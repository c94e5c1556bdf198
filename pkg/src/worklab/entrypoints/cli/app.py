"""Command-line application.

Provides the ``worklab`` entry point with:
- one subcommand per laboratory operation
- scenario files (``--config``) overridden by flags, validated by pydantic
- structured logs on stderr, reports on stdout
- exit codes: 0 ok, 2 invalid input, 3 numerical gate failure
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import Any

import pydantic
import structlog

from worklab.application.dtos import VerifyReport
from worklab.application.use_cases import (
    CheckJarzynskiUseCase,
    ComputeCharfnUseCase,
    ComputeOpenCharfnUseCase,
    ComputeWorkdistUseCase,
    ConvertUnitsUseCase,
    RunAcceptanceSuiteUseCase,
    RunInterferometerUseCase,
    VerifyFrftUseCase,
)
from worklab.application.use_cases.requests import ComputeMode, ScenarioRequest
from worklab.config import Settings, get_settings
from worklab.domain.exceptions import (
    AcceptanceGateError,
    NumericalGateError,
    ValidationError,
)
from worklab.entrypoints.cli.dtos import (
    FrftVerifyDTO,
    ScenarioConfigDTO,
    UnitsDTO,
    VerifyDTO,
)
from worklab.entrypoints.cli.mappers import (
    FrftVerifyMapper,
    ScenarioMapper,
    UnitsMapper,
    VerifyMapper,
)
from worklab.infrastructure.adapters import (
    CsvResultSink,
    SystemClock,
    load_channel_spec,
    load_scenario_file,
)
from worklab.infrastructure.observability import configure_logging, run_scope

logger = structlog.get_logger(__name__)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_GATE = 3

SCENARIO_FLAGS = (
    "q0",
    "beta_hw",
    "s_samples",
    "mode",
    "channel",
    "out_dir",
    "tail_tol",
    "unitarity_tol",
    "open_dim",
    "final_hamiltonian",
    "n_points",
    "half_width",
)

type Command = Callable[[argparse.Namespace, Settings], int]


# =============================================================================
# Input assembly
# =============================================================================


def _flag_values(args: argparse.Namespace, names: Sequence[str]) -> dict[str, Any]:
    return {name: value for name in names if (value := getattr(args, name, None)) is not None}


def scenario_dto(args: argparse.Namespace) -> ScenarioConfigDTO:
    """Scenario file keys first, then any flag given on the command line."""
    values: dict[str, Any] = {}
    if args.config is not None:
        values.update(load_scenario_file(args.config))
        channel = values.get("channel")
        if channel is not None and not Path(channel).is_absolute():
            values["channel"] = str(Path(args.config).parent / channel)
    values.update(_flag_values(args, SCENARIO_FLAGS))
    return ScenarioConfigDTO.model_validate(values)


def _sink(out_dir: str | None, settings: Settings) -> CsvResultSink:
    return CsvResultSink(out_dir or settings.out_dir)


def _scenario(
    args: argparse.Namespace, settings: Settings, mode: ComputeMode | None = None
) -> tuple[ScenarioRequest, CsvResultSink]:
    dto = scenario_dto(args)
    channel = load_channel_spec(dto.channel) if dto.channel else None
    request = ScenarioMapper.to_request(dto, settings, channel=channel, mode=mode)
    return request, _sink(dto.out_dir, settings)


def _print_artifacts(artifacts: Sequence[str]) -> None:
    for artifact in artifacts:
        print(f"wrote {artifact}")


# =============================================================================
# Commands
# =============================================================================


def command_charfn(args: argparse.Namespace, settings: Settings) -> int:
    request, sink = _scenario(args, settings)
    result = ComputeCharfnUseCase().execute(request, sink)
    _print_artifacts(result.artifacts)
    if result.doubling_drift is not None:
        print(f"truncation doubling drift {result.doubling_drift:.3e}")
    return EXIT_OK


def command_workdist(args: argparse.Namespace, settings: Settings) -> int:
    request, sink = _scenario(args, settings)
    result = ComputeWorkdistUseCase().execute(request, sink)
    print(f"mean work      {result.mean_work:.12g}")
    print(f"work variance  {result.work_variance:.12g}")
    _print_artifacts(result.artifacts)
    return EXIT_OK


def command_interf(args: argparse.Namespace, settings: Settings) -> int:
    request, sink = _scenario(args, settings, ComputeMode.INTERFEROMETRIC)
    result = RunInterferometerUseCase().execute(request, sink)
    print(f"offset              {result.re_trace.offset:.12g}")
    print(f"interference scale  {result.re_trace.interference_scale:.12g}")
    print(f"symmetry defect     {result.symmetry_defect:.3e}")
    _print_artifacts(result.artifacts)
    return EXIT_OK


def command_open_charfn(args: argparse.Namespace, settings: Settings) -> int:
    request, sink = _scenario(args, settings, ComputeMode.OPEN)
    result = ComputeOpenCharfnUseCase().execute(request, sink)
    print(f"gamma                 {result.gamma:.15g}")
    print(f"<exp(-beta u)>        {result.fluctuation_average:.15g}")
    if result.doubling_drift is not None:
        print(f"doubling drift        {result.doubling_drift:.3e}")
    _print_artifacts(result.artifacts)
    return EXIT_OK


def command_jarzynski(args: argparse.Namespace, settings: Settings) -> int:
    request, _ = _scenario(args, settings, ComputeMode.ANALYTIC)
    report = CheckJarzynskiUseCase().execute(request)
    print(f"mean work       {report.mean_work:.12g}  (q0^2/2 = {report.expected_mean_work:.12g})")
    print(f"<exp(-beta W)>  {report.lhs:.15g}")
    print(f"exp(-beta dF)   {report.rhs:.15g}  (dF = {report.free_energy_delta:.6g})")
    print(f"Jensen bound    {report.jensen_bound:.15g}")
    if not report.passed:
        raise AcceptanceGateError(
            f"|<exp(-beta W)> - exp(-beta dF)| = {abs(report.lhs - report.rhs):.3e} "
            f"exceeds {report.tolerance}"
        )
    return EXIT_OK


def command_frft_verify(args: argparse.Namespace, settings: Settings) -> int:
    dto = FrftVerifyDTO.model_validate(
        _flag_values(args, ("n_max", "n_points", "half_width", "out_dir"))
    )
    report = VerifyFrftUseCase().execute(
        FrftVerifyMapper.to_request(dto, settings), _sink(dto.out_dir, settings)
    )
    print(f"max spectral eigenphase error  {report.max_spectral_error:.3e}")
    print(f"max optical vs spectral error  {report.max_optical_error:.3e}")
    if not report.passed:
        raise AcceptanceGateError("FRFT verification exceeded its tolerances")
    return EXIT_OK


def command_units(args: argparse.Namespace, settings: Settings) -> int:  # noqa: ARG001
    dto = UnitsDTO.model_validate(_flag_values(args, ("lambda_nm", "f_mm", "alpha")))
    conversion = ConvertUnitsUseCase().execute(UnitsMapper.to_request(dto))
    print(f"z_alpha       {conversion.z_mm:.12g} mm")
    print(f"k             {conversion.k_per_mm:.12g} 1/mm")
    print(f"length scale  {conversion.length_scale_mm:.12g} mm")
    return EXIT_OK


def print_verify_report(report: VerifyReport) -> None:
    width = max(len(g.gate) for g in report.gates)
    for g in report.gates:
        status = "PASS" if g.passed else "FAIL"
        print(f"{g.gate:<{width}}  {status}  {g.value:.3e}  (tol {g.tolerance:.1e})")
    print(f"suite {report.suite}: {len(report.gates)} gates, "
          f"{len(report.failures)} failed, {report.elapsed_seconds:.1f} s")


def command_verify(args: argparse.Namespace, settings: Settings) -> int:
    dto = VerifyDTO.model_validate(_flag_values(args, ("suite", "out_dir")))
    report = RunAcceptanceSuiteUseCase(SystemClock()).execute(
        VerifyMapper.to_request(dto, settings), _sink(dto.out_dir, settings)
    )
    print_verify_report(report)
    if not report.passed:
        raise AcceptanceGateError(
            "failed gates: " + ", ".join(g.gate for g in report.failures)
        )
    return EXIT_OK


# =============================================================================
# Parser
# =============================================================================


def _add_scenario_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", type=Path, help="Scenario file (key = value)")
    parser.add_argument("--q0", type=float)
    parser.add_argument("--beta-hw", type=float)
    parser.add_argument("--s-samples", type=int)
    parser.add_argument("--mode", choices=[str(m) for m in ComputeMode])
    parser.add_argument("--channel", help="Channel spec file for open mode")
    parser.add_argument("--out-dir")
    parser.add_argument("--tail-tol", type=float)
    parser.add_argument("--unitarity-tol", type=float)
    parser.add_argument("--open-dim", type=int)
    parser.add_argument("--final-hamiltonian", choices=["initial", "displaced"])
    parser.add_argument("--n-points", type=int)
    parser.add_argument("--half-width", type=float)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="worklab",
        description="Photonic interferometer laboratory for quantum work statistics",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    scenario_commands: tuple[tuple[str, str, Command], ...] = (
        ("charfn", "Characteristic function and work distribution", command_charfn),
        ("workdist", "Work distribution and its moments", command_workdist),
        ("interf", "Simulate the interferometer traces", command_interf),
        ("open-charfn", "Open-dynamics G(s) and the fluctuation value", command_open_charfn),
        ("jarzynski", "Fluctuation relations of the quench", command_jarzynski),
    )
    for name, help_text, func in scenario_commands:
        cmd = sub.add_parser(name, help=help_text)
        _add_scenario_flags(cmd)
        cmd.set_defaults(func=func)

    frft = sub.add_parser("frft-verify", help="Lens-chain FRFT against the spectral one")
    frft.add_argument("--n-max", type=int)
    frft.add_argument("--n-points", type=int)
    frft.add_argument("--half-width", type=float)
    frft.add_argument("--out-dir")
    frft.set_defaults(func=command_frft_verify)

    units = sub.add_parser("units", help="Lens-chain geometry in laboratory units")
    units.add_argument("--lambda-nm", type=float, required=True)
    units.add_argument("--f-mm", type=float, required=True)
    units.add_argument("--alpha", type=float, required=True)
    units.set_defaults(func=command_units)

    verify = sub.add_parser("verify", help="Run an acceptance suite")
    verify.add_argument("--suite", choices=["fast", "full", "stress"], default="fast")
    verify.add_argument("--out-dir")
    verify.set_defaults(func=command_verify)
    return parser


# =============================================================================
# Entry point
# =============================================================================


def _fail(exc: Exception, exit_code: int) -> int:
    logger.error("command_failed", error_type=type(exc).__name__, exit_code=exit_code)
    line = {"error": type(exc).__name__, "message": str(exc), "exit_code": exit_code}
    print(json.dumps(line), file=sys.stderr)
    return exit_code


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        settings = get_settings()
    except pydantic.ValidationError as exc:
        return _fail(exc, EXIT_INVALID)
    configure_logging(debug=settings.debug)
    with run_scope():
        logger.info("command_started", command=args.command, threads=settings.threads)
        try:
            code: int = args.func(args, settings)
        except (ValidationError, pydantic.ValidationError) as exc:
            return _fail(exc, EXIT_INVALID)
        except NumericalGateError as exc:
            return _fail(exc, EXIT_GATE)
        logger.info("command_completed", command=args.command)
        return code


if __name__ == "__main__":
    sys.exit(main())
