"""Matrix files: JSON with run metadata, or bare CSV.

Floats are written with Python's shortest round-trip ``repr`` so reading a
file back gives bit-identical doubles. Non-finite values (unreachable
complexities) are written as JSON ``null`` / an empty CSV field and read
back as ``inf``. Every write goes to a temporary file that is then renamed
over the target.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
import tempfile
from pathlib import Path

import numpy as np

CONVENTION = "qubit0=LSB"


class SchemaError(ValueError):
    """A matrix file does not match what the caller expected."""


def atomic_write(path: str | os.PathLike, data: str | bytes) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    mode = "wb" if isinstance(data, bytes) else "w"
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, mode, **({} if mode == "wb" else {"encoding": "utf-8", "newline": "\n"})) as f:
            f.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path


def _cell(v):
    if isinstance(v, (int, np.integer)):
        return int(v)
    v = float(v)
    return v if math.isfinite(v) else None


def _rows(m: np.ndarray) -> list[list]:
    return [[_cell(v) for v in row] for row in m]


def write_matrix(m: np.ndarray, fmt: str, path, metadata: dict | None = None) -> Path:
    m = np.asarray(m)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {m.shape}")
    if fmt == "json":
        meta = {"convention": CONVENTION, **(metadata or {})}
        meta.setdefault("dim", m.shape[0])
        text = json.dumps({"metadata": meta, "data": _rows(m)}, allow_nan=False)
        return atomic_write(path, text + "\n")
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        for row in _rows(m):
            w.writerow(["" if v is None else repr(v) for v in row])
        return atomic_write(path, buf.getvalue())
    raise ValueError(f"unsupported matrix format {fmt!r}")


def _parse_cell(v):
    if v is None or v == "":
        return math.inf
    if isinstance(v, str):
        return float(v) if any(c in v for c in ".eEn") else int(v)
    return v


def _to_array(rows: list[list]) -> np.ndarray:
    vals = [[_parse_cell(v) for v in row] for row in rows]
    if len({len(r) for r in vals}) > 1:
        raise SchemaError("ragged matrix rows")
    if all(isinstance(v, int) for row in vals for v in row):
        if all(abs(v) < 2**63 for row in vals for v in row):
            return np.array(vals, dtype=np.int64)
        return np.array(vals, dtype=object)
    return np.array(vals, dtype=float)


def read_matrix(path, expect: dict | None = None) -> tuple[np.ndarray, dict]:
    """Load a matrix and its metadata (empty for CSV).

    ``expect`` maps metadata keys to required values; any disagreement
    raises :class:`SchemaError`. For CSV only ``n`` can be checked, against
    the matrix dimension.
    """
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if path.suffix == ".csv":
        rows = list(csv.reader(io.StringIO(text)))
        m, meta = _to_array(rows), {}
        if expect and "n" in expect and m.shape[0] != 2 ** expect["n"]:
            raise SchemaError(f"{path}: dimension {m.shape[0]} does not match n={expect['n']}")
        return m, meta
    try:
        doc = json.loads(text)
        meta, rows = doc["metadata"], doc["data"]
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise SchemaError(f"{path}: not a matrix document ({exc})") from exc
    m = _to_array(rows)
    if m.shape[0] != meta.get("dim", m.shape[0]) or (m.ndim == 2 and m.shape[0] != m.shape[1]):
        raise SchemaError(f"{path}: matrix shape {m.shape} disagrees with metadata")
    for key, want in (expect or {}).items():
        if meta.get(key) != want:
            raise SchemaError(f"{path}: metadata {key}={meta.get(key)!r}, expected {want!r}")
    return m, meta
