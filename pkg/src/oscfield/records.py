"""Flat-file serialization of entropy series, tables and sweep summaries.

CSV layout: one ``# key=value`` line per metadatum, a column-name line,
then data rows; ``,`` separator and ``\\n`` line endings.  Numbers are
written in scientific notation with 12 significant digits.  JSON keeps
full float precision so that summaries recomputed from it are identical.
"""

from __future__ import annotations

import io
import json
import math
from dataclasses import dataclass
from typing import Any

import numpy as np

from .entanglement import EntropySeries

__all__ = [
    "TOOL_VERSION",
    "Table",
    "format_number",
    "series_table",
    "summary_row",
    "SUMMARY_COLUMNS",
    "to_csv",
    "to_json",
    "read_json",
    "read_csv",
    "summary_from_table",
    "render",
]

TOOL_VERSION = "0.1.0"
SUMMARY_COLUMNS = ("index", "s1", "s2", "alpha", "max_entropy", "argmax_phase", "max_schmidt_number")


@dataclass
class Table:
    metadata: dict[str, Any]
    columns: list[str]
    rows: list[list[Any]]


def format_number(value) -> str:
    if isinstance(value, (int, np.integer)) and not isinstance(value, bool):
        return str(int(value))
    value = float(value)
    if value == 0.0:
        value = 0.0  # drop the sign of -0.0
    return f"{value:.11e}"


def _meta_value(value) -> str:
    if isinstance(value, float):
        return repr(value)
    return str(value)


def series_table(series: EntropySeries, metadata: dict[str, Any], bits: bool = False) -> Table:
    scale = 1.0 / math.log(2.0) if bits else 1.0
    entropy_col = "entropy_bits" if bits else "entropy_nats"
    ncols = series.lambdas.shape[1]
    columns = ["phase", entropy_col, "schmidt_number"] + [f"lambda_{k}" for k in range(ncols)]
    rows = [
        [float(p), float(s * scale), float(k)] + [float(x) for x in lam]
        for p, s, k, lam in zip(series.phases, series.entropy, series.schmidt_number, series.lambdas)
    ]
    meta = {"tool": "oscfield", "version": TOOL_VERSION, "entropy_unit": "bits" if bits else "nats"}
    meta.update(metadata)
    return Table(meta, columns, rows)


def summary_row(index: int, series: EntropySeries) -> list:
    return [
        int(index),
        int(series.source[0]),
        int(series.source[1]),
        float(series.alpha),
        series.max_entropy,
        series.argmax_phase,
        float(series.schmidt_number.max()),
    ]


def summary_from_table(index: int, table: Table) -> list:
    """Sweep summary row recomputed from a serialized entropy series."""
    cols = table.columns
    entropy_col = "entropy_nats" if "entropy_nats" in cols else "entropy_bits"
    data = np.array(table.rows, dtype=float)
    ent = data[:, cols.index(entropy_col)]
    if entropy_col == "entropy_bits":
        ent = ent * math.log(2.0)
    i = int(np.argmax(ent))
    meta = table.metadata
    return [
        int(index),
        int(meta["s1"]),
        int(meta["s2"]),
        float(meta["alpha"]),
        float(ent[i]),
        float(data[i, cols.index("phase")]),
        float(data[:, cols.index("schmidt_number")].max()),
    ]


def to_csv(table: Table) -> str:
    buf = io.StringIO()
    for key, value in table.metadata.items():
        buf.write(f"# {key}={_meta_value(value)}\n")
    buf.write(",".join(table.columns) + "\n")
    for row in table.rows:
        buf.write(",".join(format_number(v) if not isinstance(v, str) else v for v in row) + "\n")
    return buf.getvalue()


def _jsonable(value):
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (np.floating,)):
        return float(value)
    return value


def to_json(table: Table) -> str:
    payload = {
        "metadata": {k: _jsonable(v) for k, v in table.metadata.items()},
        "columns": list(table.columns),
        "rows": [[_jsonable(v) for v in row] for row in table.rows],
    }
    return json.dumps(payload, indent=1, sort_keys=False) + "\n"


def read_json(text: str) -> Table:
    payload = json.loads(text)
    return Table(payload["metadata"], payload["columns"], payload["rows"])


def _parse_field(text: str):
    try:
        return float(text)
    except ValueError:
        return text


def read_csv(text: str) -> Table:
    meta: dict[str, Any] = {}
    columns: list[str] = []
    rows: list[list[Any]] = []
    for line in text.splitlines():
        if line.startswith("#"):
            key, _, value = line[1:].strip().partition("=")
            meta[key] = value
        elif not columns:
            columns = line.split(",")
        elif line:
            rows.append([_parse_field(x) for x in line.split(",")])
    return Table(meta, columns, rows)


def render(table: Table, fmt: str) -> str:
    if fmt == "csv":
        return to_csv(table)
    if fmt == "json":
        return to_json(table)
    raise ValueError(f"unknown format {fmt!r}")
