"""Compute Work Distribution use case."""

from __future__ import annotations

import structlog

from worklab.application.dtos import WorkdistResult
from worklab.application.ports import ResultSink
from worklab.application.use_cases.compute_charfn import ComputeCharfnUseCase
from worklab.application.use_cases.requests import ComputeMode, ScenarioRequest
from worklab.application.use_cases.scenario import closed_scenario
from worklab.domain.physics.workstats import moments, workdist_direct

logger = structlog.get_logger(__name__)

WORKDIST_HEADER = ("zeta", "prob")


class ComputeWorkdistUseCase:
    """
    Use case: P(zeta) and its first two moments.

    Analytic mode sums p_n |c_{m,n}|^2 directly; the other modes invert
    their characteristic function (and write its artifacts too).
    """

    def __init__(self, charfn: ComputeCharfnUseCase | None = None) -> None:
        self._charfn = charfn or ComputeCharfnUseCase()

    def execute(self, request: ScenarioRequest, sink: ResultSink) -> WorkdistResult:
        if request.mode is ComputeMode.ANALYTIC:
            scenario = closed_scenario(request)
            dist = workdist_direct(scenario.ensemble, scenario.transitions)
            artifacts: tuple[str, ...] = (
                sink.write_table(
                    "workdist.csv",
                    WORKDIST_HEADER,
                    dist.trimmed(request.workdist_floor).to_rows(),
                ),
            )
        else:
            charfn = self._charfn.execute(request, sink)
            dist, artifacts = charfn.dist, charfn.artifacts

        stats = moments(dist)
        logger.info(
            "workdist_computed",
            mode=str(request.mode),
            mean_work=stats.mean,
            work_variance=stats.variance,
            total_probability=dist.total,
        )
        return WorkdistResult(
            mode=request.mode,
            dist=dist,
            mean_work=stats.mean,
            work_variance=stats.variance,
            artifacts=artifacts,
        )
