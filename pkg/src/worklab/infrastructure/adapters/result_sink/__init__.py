"""Result sink adapters."""

from worklab.infrastructure.adapters.result_sink.csv_file import CsvResultSink
from worklab.infrastructure.adapters.result_sink.in_memory import InMemoryResultSink

__all__ = ["CsvResultSink", "InMemoryResultSink"]
