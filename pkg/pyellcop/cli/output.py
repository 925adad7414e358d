import csv
import json
import math
import sys
from typing import Any, Iterable, Sequence

import numpy as np

from pyellcop.tools.utils import atomic_write


def format_float(x: float) -> str:
    """17 significant digits, enough to round-trip any float64."""
    return format(float(x), ".17g")


def _plain(obj: Any) -> Any:
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, np.generic):
        return obj.item()
    if hasattr(obj, "model_dump"):
        return obj.model_dump(mode="json")
    return obj


def _encode(obj: Any, indent: int, level: int) -> str:
    obj = _plain(obj)
    if obj is None or isinstance(obj, bool):
        return json.dumps(obj)
    if isinstance(obj, float):
        return format_float(obj) if math.isfinite(obj) else "null"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=False)

    pad = " " * (indent * (level + 1))
    end = " " * (indent * level)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [
            f"{pad}{json.dumps(str(k), ensure_ascii=False)}: {_encode(v, indent, level + 1)}"
            for k, v in obj.items()
        ]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        # matrix rows and numeric vectors stay on one line
        if all(not isinstance(_plain(v), (dict, list, tuple)) for v in obj):
            return "[" + ", ".join(_encode(v, indent, level + 1) for v in obj) + "]"
        items = [f"{pad}{_encode(v, indent, level + 1)}" for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    raise TypeError(f"object of type {type(obj).__name__} is not JSON serializable")


def dumps(obj: Any, indent: int = 2) -> str:
    """
    JSON text with every float written with 17 significant digits and
    non-finite floats written as null.
    """
    return _encode(obj, indent, 0) + "\n"


def write_json(obj: Any, path: str | None) -> None:
    """Write JSON to ``path`` atomically, or to stdout when path is None."""
    text = dumps(obj)
    if path is None:
        sys.stdout.write(text)
        return
    with atomic_write(path) as fp:
        fp.write(text)


def _cell(value: Any) -> str:
    value = _plain(value)
    if value is None:
        return ""
    if isinstance(value, float):
        return format_float(value)
    return str(value)


def write_csv(
    rows: Iterable[Sequence[Any]], path: str | None, header: Sequence[str] | None = None
) -> None:
    """Write rows as CSV to ``path`` atomically, or to stdout when path is None."""
    if path is None:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        if header is not None:
            writer.writerow(header)
        writer.writerows([_cell(v) for v in row] for row in rows)
        return
    with atomic_write(path) as fp:
        writer = csv.writer(fp, lineterminator="\n")
        if header is not None:
            writer.writerow(header)
        writer.writerows([_cell(v) for v in row] for row in rows)
