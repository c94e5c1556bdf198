"""Flat ``key = value`` scenario files, read with the python-dotenv parser."""

from __future__ import annotations

import io
from pathlib import Path

from dotenv.parser import Binding, parse_stream

from worklab.domain.exceptions import InvalidScenarioError


def _line_of(binding: Binding) -> int:
    """1-based line of the binding's first non-blank character."""
    text = binding.original.string
    blank = text[: len(text) - len(text.lstrip())]
    return binding.original.line + blank.count("\n")


def parse_key_values(text: str, source: str = "<text>") -> dict[str, str]:
    """
    Parse one scenario in dotenv syntax.

    Each entry is ``key = value``; ``#`` starts a comment, and values may be
    single- or double-quoted to keep ``#`` or spaces. Keys are
    case-insensitive and dashes read as underscores. Variables are not
    interpolated.

    Raises:
        InvalidScenarioError: On a malformed line, an empty value or a
            repeated key
    """
    entries: dict[str, str] = {}
    for binding in parse_stream(io.StringIO(text)):
        if binding.key is None and not binding.error:
            continue
        line = _line_of(binding)
        if binding.error or binding.key is None or not binding.value:
            raise InvalidScenarioError(f"{source}:{line}: expected 'key = value'")
        key = binding.key.lower().replace("-", "_")
        if key in entries:
            raise InvalidScenarioError(f"{source}:{line}: duplicate key '{key}'")
        entries[key] = binding.value
    return entries


def load_scenario_file(path: str | Path) -> dict[str, str]:
    file_path = Path(path)
    try:
        text = file_path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InvalidScenarioError(f"cannot read scenario file {file_path}: {exc}") from exc
    return parse_key_values(text, str(file_path))
