"""Named-operator description of a Kraus channel, buildable at any truncation."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from worklab.domain.exceptions import InvalidChannelSpecError
from worklab.domain.value_objects.sampled_field import SampledField


class OperatorKind(str, Enum):
    IDENTITY = "identity"
    DISPLACEMENT = "displacement"
    PHASE_MASK = "phase_mask"

    def __str__(self) -> str:
        """Return string value for display."""
        return self.value


@dataclass(frozen=True, slots=True)
class OperatorTerm:
    """A system operator named in a channel spec."""

    kind: OperatorKind
    q0: float = 0.0
    mask: SampledField | None = None
    label: str = ""

    def __post_init__(self) -> None:
        if not math.isfinite(self.q0):
            raise InvalidChannelSpecError("displacement strength must be finite")
        if self.kind is OperatorKind.PHASE_MASK and self.mask is None:
            raise InvalidChannelSpecError("phase_mask operator needs mask samples")
        if self.kind is not OperatorKind.PHASE_MASK and self.mask is not None:
            raise InvalidChannelSpecError(f"{self.kind} operator takes no mask")

    @classmethod
    def identity(cls) -> OperatorTerm:
        return cls(kind=OperatorKind.IDENTITY, label="identity")

    @classmethod
    def displacement(cls, q0: float) -> OperatorTerm:
        return cls(kind=OperatorKind.DISPLACEMENT, q0=q0, label=f"displacement({q0})")


@dataclass(frozen=True, slots=True)
class KrausTerm:
    """Kraus operator sqrt(weight) * operator."""

    weight: float
    operator: OperatorTerm

    def __post_init__(self) -> None:
        if not math.isfinite(self.weight) or not 0.0 < self.weight <= 1.0:
            raise InvalidChannelSpecError(
                f"Kraus weight must lie in (0, 1], got {self.weight}"
            )


@dataclass(frozen=True, slots=True)
class ChannelRecipe:
    """
    Channel built either from explicit weighted Kraus terms or from the
    polarization environment coupled through one system operator.
    """

    dim: int
    terms: tuple[KrausTerm, ...] = ()
    polarization: OperatorTerm | None = None

    def __post_init__(self) -> None:
        if isinstance(self.dim, bool) or not isinstance(self.dim, int) or self.dim < 2:
            raise InvalidChannelSpecError(f"dim must be an int >= 2, got {self.dim}")
        if bool(self.terms) == (self.polarization is not None):
            raise InvalidChannelSpecError(
                "channel needs either kraus terms or a polarization environment"
            )

    def with_dim(self, dim: int) -> ChannelRecipe:
        return ChannelRecipe(dim=dim, terms=self.terms, polarization=self.polarization)

    @property
    def max_kick(self) -> float:
        """Largest displacement strength named in the recipe."""
        operators = [t.operator for t in self.terms]
        if self.polarization is not None:
            operators.append(self.polarization)
        return max((abs(op.q0) for op in operators), default=0.0)

    @classmethod
    def unitary(cls, operator: OperatorTerm, dim: int) -> ChannelRecipe:
        return cls(dim=dim, terms=(KrausTerm(1.0, operator),))
