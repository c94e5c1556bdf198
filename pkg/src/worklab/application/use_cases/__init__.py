"""Application use cases for the work-statistics laboratory."""

from worklab.application.use_cases.check_jarzynski import CheckJarzynskiUseCase
from worklab.application.use_cases.compute_charfn import ComputeCharfnUseCase
from worklab.application.use_cases.compute_open_charfn import ComputeOpenCharfnUseCase
from worklab.application.use_cases.compute_workdist import ComputeWorkdistUseCase
from worklab.application.use_cases.convert_units import ConvertUnitsUseCase
from worklab.application.use_cases.run_acceptance_suite import RunAcceptanceSuiteUseCase
from worklab.application.use_cases.run_interferometer import RunInterferometerUseCase
from worklab.application.use_cases.verify_frft import VerifyFrftUseCase

__all__ = [
    "CheckJarzynskiUseCase",
    "ComputeCharfnUseCase",
    "ComputeOpenCharfnUseCase",
    "ComputeWorkdistUseCase",
    "ConvertUnitsUseCase",
    "RunAcceptanceSuiteUseCase",
    "RunInterferometerUseCase",
    "VerifyFrftUseCase",
]
