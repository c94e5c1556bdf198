from __future__ import annotations

from enum import Enum


class Provenance(str, Enum):
    """How the entries of a transition matrix were obtained."""

    CLOSED_FORM = "closed_form"  # analytic displacement amplitudes
    QUADRATURE = "quadrature"  # grid overlaps of the kick integrand
    GRID_PROCESS = "grid_process"  # arbitrary phase mask on a grid

    def __str__(self) -> str:
        """Return string value for display."""
        return self.value
