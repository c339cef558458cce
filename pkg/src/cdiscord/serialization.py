"""JSON/CSV emission with fixed 17-significant-digit floats.

``float(format(x, ".17g")) == x`` for every finite double, so emitted
numbers re-parse exactly and output is byte-stable across runs.
"""
from __future__ import annotations

import csv
import io
import json
import math

import numpy as np


def format_float(x: float) -> str:
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"cannot serialize non-finite float {x!r}")
    s = format(x, ".17g")
    if "e" not in s and "." not in s and "n" not in s:
        s += ".0"
    return s


def _encode(o, indent, level):
    pad = " " * (indent * (level + 1))
    end = " " * (indent * level)
    if isinstance(o, (bool, np.bool_)):
        return "true" if o else "false"
    if o is None:
        return "null"
    if isinstance(o, (int, np.integer)):
        return str(int(o))
    if isinstance(o, (float, np.floating)):
        return format_float(o)
    if isinstance(o, str):
        return json.dumps(o)
    if isinstance(o, np.ndarray):
        return _encode(o.tolist(), indent, level)
    if hasattr(o, "to_json"):
        return _encode(o.to_json(), indent, level)
    if isinstance(o, dict):
        if not o:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {_encode(v, indent, level + 1)}" for k, v in o.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(o, (list, tuple)):
        if not o:
            return "[]"
        # numeric rows stay on one line
        if all(isinstance(v, (int, float, np.number)) and not isinstance(v, bool) for v in o):
            return "[" + ", ".join(_encode(v, indent, level) for v in o) + "]"
        items = [pad + _encode(v, indent, level + 1) for v in o]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    raise TypeError(f"cannot serialize {type(o).__name__}")


def dumps(obj, indent=2) -> str:
    return _encode(obj, indent, 0) + "\n"


def loads(text: str):
    return json.loads(text)


def rows_to_csv(rows, columns) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([_csv_cell(row[c]) for c in columns])
    return buf.getvalue()


def _csv_cell(v):
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (float, np.floating)):
        return format_float(v)
    if isinstance(v, (dict, list, tuple, np.ndarray)):
        return dumps(v, indent=0).replace("\n", "")
    return v
