"""
Report rendering.

Text reports are flat ``key: value`` lines, nested fields joined with dots
and list items numbered (``verdicts.forward.counterexample.x.0: a``). The
JSON form is the pydantic serialization of the report.
"""

from typing import Any

from src.core.errors import ParseError
from src.models.report import Report


def _scalar(value: Any) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.6f}"
    # one line per key
    return str(value).replace("\n", "\\n")


def _flatten(prefix: str, value: Any, lines: list[str]) -> None:
    if isinstance(value, dict):
        if not value:
            lines.append(f"{prefix}: {{}}")
        for key, item in value.items():
            _flatten(f"{prefix}.{key}" if prefix else str(key), item, lines)
    elif isinstance(value, list):
        if not value:
            lines.append(f"{prefix}: []")
        for i, item in enumerate(value):
            _flatten(f"{prefix}.{i}", item, lines)
    else:
        lines.append(f"{prefix}: {_scalar(value)}")


def render_text(report: Report) -> str:
    lines: list[str] = []
    _flatten("", report.model_dump(mode="json"), lines)
    lines.append(f"exit_code: {int(report.exit_code)}")
    return "\n".join(lines) + "\n"


def render_json(report: Report) -> str:
    return report.model_dump_json(indent=2) + "\n"


def parse_report_text(text: str) -> dict[str, str]:
    """
    Read a text report back into its ``key -> value`` lines.

    Raises:
        ParseError: On a line without a ``key: value`` separator or a repeated key
    """
    fields: dict[str, str] = {}
    for number, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        key, sep, value = line.partition(": ")
        if not sep:
            if line.endswith(":"):
                key, value = line[:-1], ""
            else:
                raise ParseError(f"not a 'key: value' line: {line!r}", number)
        if key in fields:
            raise ParseError(f"repeated key {key!r}", number)
        fields[key] = value
    return fields
