"""Compute Characteristic Function use case."""

from __future__ import annotations

import structlog

from worklab.application.dtos import CharfnResult
from worklab.application.ports import ResultSink
from worklab.application.use_cases.compute_open_charfn import ComputeOpenCharfnUseCase
from worklab.application.use_cases.requests import ComputeMode, ScenarioRequest
from worklab.application.use_cases.run_interferometer import RunInterferometerUseCase
from worklab.application.use_cases.scenario import closed_scenario
from worklab.domain.physics.workstats import (
    charfn_trace,
    check_normalization,
    workdist_from_trace,
)

logger = structlog.get_logger(__name__)

CHARFN_HEADER = ("s", "re_G", "im_G")
WORKDIST_HEADER = ("zeta", "prob")
TRANSITIONS_HEADER = ("m", "n", "re", "im")
NORMALIZATION_TOL = 1e-10


class ComputeCharfnUseCase:
    """
    Use case: G(s) on the uniform s grid and the work distribution it
    inverts to, via the selected mode.

    - analytic: closed-form amplitudes and the thermal sum (also writes the
      amplitude table)
    - interferometric: the simulated optics pipeline (also writes traces)
    - open: the Kraus-channel generalization
    """

    def __init__(
        self,
        interferometer: RunInterferometerUseCase | None = None,
        open_dynamics: ComputeOpenCharfnUseCase | None = None,
    ) -> None:
        self._interferometer = interferometer or RunInterferometerUseCase()
        self._open = open_dynamics or ComputeOpenCharfnUseCase()

    def execute(self, request: ScenarioRequest, sink: ResultSink) -> CharfnResult:
        logger.info(
            "charfn_requested",
            mode=str(request.mode),
            q0=request.q0,
            beta_hw=request.beta_hw,
        )
        match request.mode:
            case ComputeMode.INTERFEROMETRIC:
                run = self._interferometer.execute(request, sink)
                result = CharfnResult(
                    mode=request.mode, trace=run.trace, dist=run.dist, artifacts=run.artifacts
                )
            case ComputeMode.OPEN:
                opened = self._open.execute(request, sink)
                result = CharfnResult(
                    mode=request.mode,
                    trace=opened.trace,
                    dist=opened.dist,
                    artifacts=opened.artifacts,
                    doubling_drift=opened.doubling_drift,
                )
            case _:
                result = self._analytic(request, sink)

        logger.info(
            "charfn_computed",
            mode=str(request.mode),
            samples=len(result.trace),
            d_min=result.dist.d_min,
            d_max=result.dist.d_max,
        )
        return result

    def _analytic(self, request: ScenarioRequest, sink: ResultSink) -> CharfnResult:
        scenario = closed_scenario(request)
        trace = charfn_trace(scenario.ensemble, scenario.transitions, request.s_samples)
        check_normalization(trace, NORMALIZATION_TOL)
        dist = workdist_from_trace(trace)
        artifacts = (
            sink.write_table("charfn.csv", CHARFN_HEADER, trace.to_rows()),
            sink.write_table(
                "workdist.csv",
                WORKDIST_HEADER,
                dist.trimmed(request.workdist_floor).to_rows(),
            ),
            sink.write_table(
                "transitions.csv", TRANSITIONS_HEADER, scenario.transitions.to_rows()
            ),
        )
        return CharfnResult(
            mode=ComputeMode.ANALYTIC, trace=trace, dist=dist, artifacts=artifacts
        )
