"""Domain entities: numerical records produced and consumed by the physics modules."""

from worklab.domain.entities.charfn_trace import CharFnTrace
from worklab.domain.entities.intensity_trace import IntensityTrace
from worklab.domain.entities.interferometer_config import (
    IMAGINARY_PART,
    REAL_PART,
    InterferometerConfig,
)
from worklab.domain.entities.operators import (
    DensityMatrix,
    KrausChannel,
    TruncatedOperator,
)
from worklab.domain.entities.thermal_ensemble import ThermalEnsemble
from worklab.domain.entities.transition_matrix import TransitionMatrix
from worklab.domain.entities.work_dist import WorkDist

__all__ = [
    "IMAGINARY_PART",
    "REAL_PART",
    "CharFnTrace",
    "DensityMatrix",
    "IntensityTrace",
    "InterferometerConfig",
    "KrausChannel",
    "ThermalEnsemble",
    "TransitionMatrix",
    "TruncatedOperator",
    "WorkDist",
]
