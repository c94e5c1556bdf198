from __future__ import annotations

from abc import ABC, abstractmethod
from collections.abc import Iterable, Sequence

type Cell = float | int | str | bool


class ResultSink(ABC):
    """Port for tabular result artifacts.

    Contract:
    - write_table() writes one header row followed by the rows, in order
    - floats MUST be rendered with 17 significant digits so identical runs
      produce byte-identical artifacts
    - the returned string identifies the artifact (a path for file sinks)
    """

    @abstractmethod
    def write_table(
        self,
        name: str,
        header: Sequence[str],
        rows: Iterable[Sequence[Cell]],
    ) -> str:
        """Write a table and return where it went."""
        ...
