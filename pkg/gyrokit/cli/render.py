"""Machine-readable output: JSON and CSV with every float at 17 significant digits."""

import csv
import io
import json
import math
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Any

import numpy as np


@dataclass
class Output:
    """A command's result: a JSON record, plus an optional table used for CSV."""

    record: dict[str, Any]
    header: list[str] | None = None
    rows: list[list[Any]] = field(default_factory=list)


def format_number(value: float) -> str:
    if not math.isfinite(value):
        return "null"
    return format(value, ".17g")


def _scalar(value: Any) -> Any:
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    return value


def render_json(value: Any, indent: int = 2, _level: int = 0) -> str:
    value = _scalar(value)
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format_number(value)
    if isinstance(value, str):
        return json.dumps(value, ensure_ascii=False)
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {render_json(v, indent, _level + 1)}" for k, v in value.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(value, list | tuple):
        if all(not isinstance(_scalar(v), dict | list | tuple) for v in value):
            return "[" + ", ".join(render_json(v, indent, _level + 1) for v in value) + "]"
        items = [pad + render_json(v, indent, _level + 1) for v in value]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    raise TypeError(f"Cannot render {type(value).__name__} as JSON")


def _cell(value: Any) -> str:
    value = _scalar(value)
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format_number(value) if math.isfinite(value) else ""
    return str(value)


def render_csv(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_cell(v) for v in row])
    return buffer.getvalue()


def render(output: Output, fmt: str) -> str:
    if fmt == "json":
        return render_json(output.record) + "\n"
    if output.header is not None:
        return render_csv(output.header, output.rows)
    scalars = {k: v for k, v in output.record.items() if not isinstance(_scalar(v), dict | list | tuple)}
    return render_csv(list(scalars), [list(scalars.values())])
