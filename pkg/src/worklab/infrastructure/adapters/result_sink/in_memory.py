from __future__ import annotations

from collections.abc import Iterable, Sequence

from worklab.application.ports import Cell, ResultSink
from worklab.infrastructure.adapters.result_sink.formatting import format_cell


class InMemoryResultSink(ResultSink):
    """
    In-memory result sink for testing.

    Keeps the formatted text of every table so tests can compare artifacts
    byte for byte without touching the filesystem.
    """

    def __init__(self) -> None:
        self.tables: dict[str, list[list[str]]] = {}

    def write_table(
        self,
        name: str,
        header: Sequence[str],
        rows: Iterable[Sequence[Cell]],
    ) -> str:
        lines = [list(header)]
        for row in rows:
            if len(row) != len(header):
                raise ValueError(
                    f"{name}: row has {len(row)} cells, header has {len(header)}"
                )
            lines.append([format_cell(cell) for cell in row])
        self.tables[name] = lines
        return f"memory://{name}"

    def rows(self, name: str) -> list[list[str]]:
        """Data rows of a table, header excluded."""
        return self.tables[name][1:]

    def text(self, name: str) -> str:
        """The table as the CSV sink would write it."""
        return "".join(",".join(line) + "\n" for line in self.tables[name])

    def clear(self) -> None:
        self.tables.clear()
