"""Run-scoped context for log correlation.

Every CLI invocation gets one run id; all log lines of that run carry it.
"""

from __future__ import annotations

import uuid
from collections.abc import Iterator
from contextlib import contextmanager
from contextvars import ContextVar

# Run-scoped context variable
run_id_ctx: ContextVar[str] = ContextVar("run_id", default="")


def get_run_id() -> str:
    """Get current run ID from context."""
    return run_id_ctx.get()


@contextmanager
def run_scope(run_id: str | None = None) -> Iterator[str]:
    """
    Bind a run id (generated as uuid4 when not given) for the duration of
    the block.
    """
    value = run_id or str(uuid.uuid4())
    token = run_id_ctx.set(value)
    try:
        yield value
    finally:
        run_id_ctx.reset(token)
