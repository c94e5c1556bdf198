from __future__ import annotations

import csv
from collections.abc import Iterable, Sequence
from pathlib import Path

import structlog

from worklab.application.ports import Cell, ResultSink
from worklab.infrastructure.adapters.result_sink.formatting import format_cell

logger = structlog.get_logger(__name__)


class CsvResultSink(ResultSink):
    """Writes each table as <out_dir>/<name>, creating the directory on demand."""

    def __init__(self, out_dir: str | Path) -> None:
        self._out_dir = Path(out_dir)

    @property
    def out_dir(self) -> Path:
        return self._out_dir

    def write_table(
        self,
        name: str,
        header: Sequence[str],
        rows: Iterable[Sequence[Cell]],
    ) -> str:
        self._out_dir.mkdir(parents=True, exist_ok=True)
        path = self._out_dir / name
        count = 0
        with path.open("w", newline="", encoding="utf-8") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(header)
            for row in rows:
                if len(row) != len(header):
                    raise ValueError(
                        f"{name}: row has {len(row)} cells, header has {len(header)}"
                    )
                writer.writerow([format_cell(cell) for cell in row])
                count += 1
        logger.debug("table_written", path=str(path), rows=count)
        return str(path)
