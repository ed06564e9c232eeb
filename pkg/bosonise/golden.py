"""Comparison of reports against golden files.

Golden files hold complete reports. Strings that parse as polynomials (or
spherical expressions) with at least one variable are equal when they agree up
to a unit (1, i, -1, -i); any other multiple is a change. Everything else must
match exactly. Report keys a golden document lacks are listed as ``added`` and
fail the check like modified or missing keys, so a golden file cannot silently
cover less than the report it pins.
"""

from __future__ import annotations

from pathlib import Path
from typing import Any

from bosonise.algebra import UNITS, Polynomial, equal_up_to_unit
from bosonise.errors import GoldenMismatchError, ParseError
from bosonise.spherical import parse_spherical
from bosonise.textfmt import format_terms, parse_polynomial, variable_name
from bosonise.utils import load_json

Changes = dict[str, list[dict[str, Any]]]


def _as_polynomial(text: str) -> Polynomial | None:
    for parse in (parse_polynomial, lambda s: parse_spherical(s).expand()):
        try:
            p = parse(text)
        except ParseError:
            continue
        return p if p.variables() else None
    return None


def _term_strings(p: Polynomial) -> list[str]:
    return [format_terms([(c, [(variable_name(v), e) for v, e in m])]) for m, c in p.terms()]


def _compare_strings(path: str, expected: str, actual: str) -> dict[str, Any] | None:
    if expected == actual:
        return None
    pe, pa = _as_polynomial(expected), _as_polynomial(actual)
    if pe is not None and pa is not None:
        if equal_up_to_unit(pa, pe):
            return None
        m0, c0 = pe.leading()
        ratio = pa.coefficient(m0) / c0
        te = _term_strings(pe.scale(ratio) if ratio in UNITS else pe)
        ta = _term_strings(pa)
        return {
            "path": path,
            "expected": expected,
            "actual": actual,
            "terms_only_in_golden": [t for t in te if t not in ta],
            "terms_only_in_output": [t for t in ta if t not in te],
        }
    return {"path": path, "expected": expected, "actual": actual}


def _walk(path: str, expected: Any, actual: Any, changes: Changes) -> None:
    if isinstance(expected, dict):
        if not isinstance(actual, dict):
            changes["modified"].append({"path": path, "expected": expected, "actual": actual})
            return
        for key in sorted(expected.keys() | actual.keys()):
            sub = f"{path}.{key}" if path else key
            if key not in actual:
                changes["deleted"].append({"path": sub, "expected": expected[key]})
            elif key not in expected:
                changes["added"].append({"path": sub, "actual": actual[key]})
            else:
                _walk(sub, expected[key], actual[key], changes)
        return
    if isinstance(expected, list):
        if not isinstance(actual, list) or len(actual) != len(expected):
            changes["modified"].append({"path": path, "expected": expected, "actual": actual})
            return
        for i, (e, a) in enumerate(zip(expected, actual, strict=True)):
            _walk(f"{path}[{i}]", e, a, changes)
        return
    if isinstance(expected, str) and isinstance(actual, str):
        diff = _compare_strings(path, expected, actual)
    else:
        diff = None if expected == actual and type(expected) is type(actual) else {
            "path": path,
            "expected": expected,
            "actual": actual,
        }
    if diff is None:
        changes["unchanged"].append({"path": path})
    else:
        changes["modified"].append(diff)


def compute_changes(report: dict[str, Any], golden: dict[str, Any]) -> Changes:
    """Diff of a report against a golden document.

    Returns:
        Dict with keys: modified, deleted, added, unchanged. ``deleted`` lists
        golden keys the report lacks, ``added`` report keys the golden lacks.
    """
    changes: Changes = {"modified": [], "deleted": [], "added": [], "unchanged": []}
    _walk("", golden, report, changes)
    return changes


def check_golden(report: dict[str, Any], golden_path: Path) -> Changes:
    """Raises GoldenMismatchError when the report disagrees with the golden file."""
    changes = compute_changes(report, load_json(golden_path))
    if changes["modified"] or changes["deleted"] or changes["added"]:
        raise GoldenMismatchError(
            f"{len(changes['modified'])} modified, {len(changes['deleted'])} missing and "
            f"{len(changes['added'])} unlisted field(s) vs {golden_path}",
            changes=changes,
            hint="regenerate the report with --format json and review the diff",
        )
    return changes
