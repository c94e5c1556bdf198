"""Check Jarzynski use case."""

from __future__ import annotations

import math

import structlog

from worklab.application.dtos import JarzynskiReport
from worklab.application.use_cases.requests import ScenarioRequest
from worklab.application.use_cases.scenario import jarzynski_scenario
from worklab.domain.physics.thermo import free_energy_delta
from worklab.domain.physics.workstats import (
    jarzynski_lhs,
    jensen_bound,
    moments,
    workdist_direct,
)
from worklab.domain.value_objects import Spectrum

logger = structlog.get_logger(__name__)

JARZYNSKI_TOL = 2e-6


class CheckJarzynskiUseCase:
    """
    Use case: fluctuation relations of the displacement quench.

    <e^{-beta W}> is compared with e^{-beta dF}; both spectra are the
    harmonic ladder, so dF = 0 and the target is 1. The mean work is
    reported next to its exact value q0^2 / 2. The ensemble is extended to
    the rows of the amplitude block so rare downward transitions, which the
    average weights by e^{+beta n}, are not cut away.
    """

    def execute(self, request: ScenarioRequest) -> JarzynskiReport:
        scenario = jarzynski_scenario(request)
        dist = workdist_direct(scenario.ensemble, scenario.transitions)
        delta_f = free_energy_delta(Spectrum.harmonic(), Spectrum.harmonic(), request.beta_hw)
        report = JarzynskiReport(
            q0=request.q0,
            beta_hw=request.beta_hw,
            mean_work=moments(dist).mean,
            expected_mean_work=0.5 * request.q0 * request.q0,
            lhs=jarzynski_lhs(dist, request.beta_hw),
            rhs=math.exp(-request.beta_hw * delta_f),
            free_energy_delta=delta_f,
            jensen_bound=jensen_bound(dist, request.beta_hw),
            tolerance=JARZYNSKI_TOL,
        )
        log = logger.info if report.passed else logger.warning
        log(
            "jarzynski_checked",
            lhs=report.lhs,
            rhs=report.rhs,
            mean_work=report.mean_work,
            jensen_bound=report.jensen_bound,
            passed=report.passed,
        )
        return report
