"""Infrastructure adapters implementing application ports and file formats."""

from worklab.infrastructure.adapters.channel_spec import load_channel_spec, parse_channel_spec
from worklab.infrastructure.adapters.clock import FixedClock, SystemClock
from worklab.infrastructure.adapters.result_sink import CsvResultSink, InMemoryResultSink
from worklab.infrastructure.adapters.scenario_file import load_scenario_file, parse_key_values

__all__ = [
    "CsvResultSink",
    "FixedClock",
    "InMemoryResultSink",
    "SystemClock",
    "load_channel_spec",
    "load_scenario_file",
    "parse_channel_spec",
    "parse_key_values",
]
