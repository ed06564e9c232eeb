"""Utility functions for bosonise."""

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from bosonise.errors import BosonisationError


def dump_report(d: dict[str, Any] | Any) -> str:
    """Stable pretty JSON for stdout and golden files."""
    if hasattr(d, "model_dump"):
        d = d.model_dump(mode="json")
    return json.dumps(d, sort_keys=True, indent=2)


def rational_str(q: Fraction | int) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def read_text_input(path: Path) -> str:
    """Reads a polynomial file, ignoring blank lines and '#' comments."""
    try:
        raw = path.read_text(encoding="utf-8")
    except OSError as e:
        raise BosonisationError(f"Cannot read {path}: {e}") from e
    lines = [ln.strip() for ln in raw.splitlines()]
    return "".join(ln for ln in lines if ln and not ln.startswith("#"))


def load_json(path: Path) -> Any:
    try:
        with open(path, encoding="utf-8") as f:
            return json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise BosonisationError(f"Cannot load {path}: {e}", hint="golden files are JSON documents") from e
