"""Observability: structured logging and run correlation."""

from worklab.infrastructure.observability.logging import (
    add_run_id,
    configure_logging,
    unwrap_numpy,
)
from worklab.infrastructure.observability.run_context import get_run_id, run_scope

__all__ = [
    "add_run_id",
    "configure_logging",
    "get_run_id",
    "run_scope",
    "unwrap_numpy",
]
