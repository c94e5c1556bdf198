"""Run Interferometer use case."""

from __future__ import annotations

import structlog

from worklab.application.dtos import InterferometerResult
from worklab.application.ports import ResultSink
from worklab.application.use_cases.requests import ScenarioRequest
from worklab.application.use_cases.scenario import closed_scenario, prism_config
from worklab.domain.entities import IMAGINARY_PART, REAL_PART
from worklab.domain.physics.interferometer import (
    process_field,
    reconstruct_charfn,
    thermal_trace,
)
from worklab.domain.physics.workstats import (
    default_sample_count,
    hermitian_symmetry_defect,
    uniform_s_grid,
    workdist_from_trace,
)

logger = structlog.get_logger(__name__)

INTENSITY_HEADER = ("s", "out0", "out1", "offset")
CHARFN_HEADER = ("s", "re_G", "im_G")
WORKDIST_HEADER = ("zeta", "prob")
TRANSITIONS_HEADER = ("m", "n", "re", "im")
FIELD_HEADER = ("x", "re", "im")


class RunInterferometerUseCase:
    """
    Use case: simulate both PZT settings of the interferometer for a thermal
    input and reconstruct G(s) and P(zeta) from the detector traces.

    Artifacts:
    - interf_re.csv / interf_im.csv: traces at theta = 0 and theta = pi/2
    - charfn.csv: reconstructed G(s)
    - workdist.csv: inverted distribution, edges at or below the floor trimmed
    - transitions.csv: the closed-form amplitudes c_mn the prism realizes
    - prism_field.csv: the ground mode right after the prism
    """

    def execute(self, request: ScenarioRequest, sink: ResultSink) -> InterferometerResult:
        """
        Simulate, reconstruct and export one scenario.

        Raises:
            NormalizationFailureError: If the reconstructed Re G(0) is off by > 1e-6
            AliasingError: If s_samples cannot resolve the work support
            NumericalGateError: If any optics precondition fails on the grid
        """
        scenario = closed_scenario(request)
        cfg = prism_config(request, scenario)
        count = request.s_samples or default_sample_count(
            scenario.ensemble, scenario.transitions
        )
        s_grid = uniform_s_grid(count)

        logger.info(
            "interferometer_started",
            q0=request.q0,
            beta_hw=request.beta_hw,
            n_cut=scenario.ensemble.n_cut,
            n_basis=cfg.resolved_n_basis,
            n_points=cfg.resolved_grid.n_points,
            s_samples=count,
            workers=request.workers,
        )

        re_trace = thermal_trace(
            scenario.ensemble, cfg.with_phase_offset(REAL_PART), s_grid, workers=request.workers
        )
        im_trace = thermal_trace(
            scenario.ensemble,
            cfg.with_phase_offset(IMAGINARY_PART),
            s_grid,
            workers=request.workers,
        )
        trace = reconstruct_charfn(re_trace, im_trace)
        defect = hermitian_symmetry_defect(trace)
        dist = workdist_from_trace(trace)

        artifacts = (
            sink.write_table("interf_re.csv", INTENSITY_HEADER, re_trace.to_rows()),
            sink.write_table("interf_im.csv", INTENSITY_HEADER, im_trace.to_rows()),
            sink.write_table("charfn.csv", CHARFN_HEADER, trace.to_rows()),
            sink.write_table(
                "workdist.csv",
                WORKDIST_HEADER,
                dist.trimmed(request.workdist_floor).to_rows(),
            ),
            sink.write_table(
                "transitions.csv", TRANSITIONS_HEADER, scenario.transitions.to_rows()
            ),
            sink.write_table("prism_field.csv", FIELD_HEADER, process_field(0, cfg).to_rows()),
        )

        logger.info(
            "interferometer_completed",
            offset=re_trace.offset,
            interference_scale=re_trace.interference_scale,
            symmetry_defect=defect,
            total_probability=dist.total,
        )

        return InterferometerResult(
            re_trace=re_trace,
            im_trace=im_trace,
            trace=trace,
            dist=dist,
            symmetry_defect=defect,
            artifacts=artifacts,
        )
