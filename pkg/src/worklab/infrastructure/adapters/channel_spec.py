"""
Channel spec files.

    dim = 64
    kraus = 0.5 * identity
    kraus = 0.5 * displacement(1.0)

or, for the polarization environment,

    dim = 64
    environment = polarization(phase_mask(prism.csv))

Mask files are CSV with columns x, re, im on a symmetric midpoint grid;
paths are relative to the spec file.
"""

from __future__ import annotations

import csv
import math
import re
from pathlib import Path

import numpy as np

from worklab.domain.exceptions import InvalidChannelSpecError, ValidationError
from worklab.domain.value_objects import (
    ChannelRecipe,
    GridSpec,
    KrausTerm,
    OperatorKind,
    OperatorTerm,
    SampledField,
)

_KRAUS = re.compile(r"^(?P<weight>[^*]+)\*(?P<operator>.+)$")
_CALL = re.compile(r"^(?P<name>[a-z_]+)\s*(?:\((?P<arg>.*)\))?$")
_ENVIRONMENT = re.compile(r"^polarization\s*\((?P<operator>.+)\)$")
GRID_MATCH_TOL = 1e-9


def load_mask_csv(path: Path) -> SampledField:
    """
    Read a complex mask sampled at x_j; the grid is inferred from the x column.

    Raises:
        InvalidChannelSpecError: If the file is unreadable or x is not a
            symmetric midpoint grid
    """
    try:
        with path.open(newline="", encoding="utf-8") as handle:
            rows = list(csv.DictReader(handle))
        x = np.array([float(r["x"]) for r in rows])
        values = np.array([complex(float(r["re"]), float(r["im"])) for r in rows])
    except (OSError, KeyError, TypeError, ValueError) as exc:
        raise InvalidChannelSpecError(f"cannot read mask file {path}: {exc}") from exc
    if x.size < 2:
        raise InvalidChannelSpecError(f"mask file {path} needs at least two samples")
    dx = float(x[-1] - x[0]) / (x.size - 1)
    half_width = 0.5 * dx * x.size
    try:
        grid = GridSpec(n_points=int(x.size), half_width=half_width)
    except ValidationError as exc:
        raise InvalidChannelSpecError(f"mask file {path}: {exc}") from exc
    if float(np.max(np.abs(grid.x - x))) > GRID_MATCH_TOL * half_width:
        raise InvalidChannelSpecError(
            f"mask file {path}: x is not a symmetric midpoint grid"
        )
    return SampledField(grid, values)


def parse_operator(text: str, base_dir: Path) -> OperatorTerm:
    match = _CALL.match(text.strip())
    if match is None:
        raise InvalidChannelSpecError(f"cannot parse operator '{text.strip()}'")
    name, arg = match["name"], match["arg"]
    try:
        kind = OperatorKind(name)
    except ValueError as exc:
        raise InvalidChannelSpecError(f"unknown operator '{name}'") from exc
    match kind:
        case OperatorKind.IDENTITY:
            if arg is not None and arg.strip():
                raise InvalidChannelSpecError("identity takes no argument")
            return OperatorTerm.identity()
        case OperatorKind.DISPLACEMENT:
            try:
                q0 = float(arg or "")
            except ValueError as exc:
                raise InvalidChannelSpecError(f"displacement needs a number, got '{arg}'") from exc
            return OperatorTerm.displacement(q0)
        case OperatorKind.PHASE_MASK:
            if not arg or not arg.strip():
                raise InvalidChannelSpecError("phase_mask needs a file path")
            mask_path = base_dir / arg.strip()
            return OperatorTerm(
                kind=OperatorKind.PHASE_MASK,
                mask=load_mask_csv(mask_path),
                label=f"phase_mask({arg.strip()})",
            )
    raise InvalidChannelSpecError(f"unsupported operator '{name}'")


def parse_channel_spec(text: str, base_dir: Path, source: str = "<text>") -> ChannelRecipe:
    """
    Raises:
        InvalidChannelSpecError: On any malformed line, an unknown key, a
            missing dim, or a mix of kraus and environment lines
    """
    dim: int | None = None
    terms: list[KrausTerm] = []
    environment: OperatorTerm | None = None
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = (part.strip() for part in line.partition("="))
        where = f"{source}:{number}"
        if not sep or not value:
            raise InvalidChannelSpecError(f"{where}: expected 'key = value'")
        match key.lower():
            case "dim":
                try:
                    dim = int(value)
                except ValueError as exc:
                    raise InvalidChannelSpecError(f"{where}: dim must be an integer") from exc
            case "kraus":
                kraus = _KRAUS.match(value)
                if kraus is None:
                    raise InvalidChannelSpecError(f"{where}: expected '<weight> * <operator>'")
                try:
                    weight = float(kraus["weight"])
                except ValueError as exc:
                    raise InvalidChannelSpecError(f"{where}: bad weight") from exc
                if not math.isfinite(weight):
                    raise InvalidChannelSpecError(f"{where}: weight must be finite")
                terms.append(KrausTerm(weight, parse_operator(kraus["operator"], base_dir)))
            case "environment":
                env = _ENVIRONMENT.match(value)
                if env is None or environment is not None:
                    raise InvalidChannelSpecError(
                        f"{where}: expected one 'polarization(<operator>)' environment"
                    )
                environment = parse_operator(env["operator"], base_dir)
            case _:
                raise InvalidChannelSpecError(f"{where}: unknown key '{key}'")
    if dim is None:
        raise InvalidChannelSpecError(f"{source}: missing 'dim = <D>'")
    return ChannelRecipe(dim=dim, terms=tuple(terms), polarization=environment)


def load_channel_spec(path: str | Path) -> ChannelRecipe:
    spec_path = Path(path)
    try:
        text = spec_path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InvalidChannelSpecError(f"cannot read channel spec {spec_path}: {exc}") from exc
    return parse_channel_spec(text, spec_path.parent, str(spec_path))
