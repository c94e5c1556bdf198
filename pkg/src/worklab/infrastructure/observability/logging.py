"""Structured logging configuration using structlog.

Batch runs emit one JSON object per line; debug runs use the colored
console renderer. Everything goes to stderr so stdout carries reports only.
"""

from __future__ import annotations

import logging
import sys
from typing import Any

import numpy as np
import structlog

from worklab.infrastructure.observability.run_context import get_run_id


def add_run_id(
    logger: structlog.types.WrappedLogger,  # noqa: ARG001
    method_name: str,  # noqa: ARG001
    event_dict: structlog.types.EventDict,
) -> structlog.types.EventDict:
    """Processor to add run_id to every log entry."""
    run_id = get_run_id()
    if run_id:
        event_dict["run_id"] = run_id
    return event_dict


def unwrap_numpy(
    logger: structlog.types.WrappedLogger,  # noqa: ARG001
    method_name: str,  # noqa: ARG001
    event_dict: structlog.types.EventDict,
) -> structlog.types.EventDict:
    """Processor turning numpy scalars and small arrays into plain Python values."""
    for key, value in event_dict.items():
        if isinstance(value, np.generic):
            event_dict[key] = value.item()
        elif isinstance(value, np.ndarray):
            event_dict[key] = value.tolist() if value.size <= 16 else f"<array {value.shape}>"
    return event_dict


def configure_logging(*, debug: bool = False) -> None:
    """
    Configure structlog for one laboratory run.

    Args:
        debug: Console output at DEBUG when True; JSON at INFO otherwise.
    """
    shared_processors: list[Any] = [
        structlog.contextvars.merge_contextvars,
        add_run_id,
        unwrap_numpy,
        structlog.processors.add_log_level,
        structlog.processors.StackInfoRenderer(),
        structlog.processors.format_exc_info,
        structlog.processors.TimeStamper(fmt="iso", utc=True),
        structlog.processors.CallsiteParameterAdder(
            [
                structlog.processors.CallsiteParameter.MODULE,
                structlog.processors.CallsiteParameter.LINENO,
            ]
        ),
    ]

    renderers: list[Any] = (
        [structlog.dev.ConsoleRenderer(colors=True)]
        if debug
        else [
            structlog.processors.EventRenamer("message"),
            structlog.processors.dict_tracebacks,
            structlog.processors.JSONRenderer(),
        ]
    )

    # no logger caching: stderr may be replaced between runs
    structlog.configure(
        processors=[*shared_processors, *renderers],
        wrapper_class=structlog.make_filtering_bound_logger(
            logging.DEBUG if debug else logging.INFO
        ),
        context_class=dict,
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
        cache_logger_on_first_use=False,
    )
