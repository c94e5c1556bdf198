from __future__ import annotations

from worklab.application.ports import Cell


def format_cell(value: Cell) -> str:
    """Locale-free text for one cell: floats at 17 significant digits, -0.0 as 0."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        if value == 0.0:
            value = 0.0
        return f"{value:.17g}"
    return str(value)
