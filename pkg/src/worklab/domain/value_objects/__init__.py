"""Domain value objects."""

from worklab.domain.value_objects.channel_recipe import (
    ChannelRecipe,
    KrausTerm,
    OperatorKind,
    OperatorTerm,
)
from worklab.domain.value_objects.final_basis import FinalBasis, FinalBasisKind
from worklab.domain.value_objects.frft_order import FrftOrder
from worklab.domain.value_objects.grid_spec import GridSpec
from worklab.domain.value_objects.mode_index import DEFAULT_N_MAX, ModeIndex
from worklab.domain.value_objects.optical_element import (
    FreeSpace,
    IndexChannel,
    OpticalElement,
    PhaseMask,
    ThinLens,
)
from worklab.domain.value_objects.provenance import Provenance
from worklab.domain.value_objects.sampled_field import SampledField
from worklab.domain.value_objects.spectrum import Spectrum, SpectrumKind

__all__ = [
    "DEFAULT_N_MAX",
    "ChannelRecipe",
    "FinalBasis",
    "FinalBasisKind",
    "FreeSpace",
    "FrftOrder",
    "GridSpec",
    "IndexChannel",
    "KrausTerm",
    "ModeIndex",
    "OperatorKind",
    "OperatorTerm",
    "OpticalElement",
    "PhaseMask",
    "Provenance",
    "SampledField",
    "Spectrum",
    "SpectrumKind",
    "ThinLens",
]
