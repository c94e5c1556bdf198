"""Application ports."""

from worklab.application.ports.clock import Clock
from worklab.application.ports.result_sink import Cell, ResultSink

__all__ = [
    "Cell",
    "Clock",
    "ResultSink",
]
