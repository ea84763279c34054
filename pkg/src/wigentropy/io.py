"""File formats: sampled fields (CSV and binary) and check reports (JSON and CSV).

Binary field layout (little endian)::

    4 bytes   magic  b"WGF1"
    3 x f8,q  x_min, x_max, nx        (f8, f8, i8)
    3 x f8,q  p_min, p_max, np
    1 byte    1 if complex else 0
    payload   row-major float64 (x index slowest); complex samples are
              stored as interleaved (re, im) pairs
"""

from __future__ import annotations

import csv
import io as _io
import json
import math
import struct
from pathlib import Path

import numpy as np

from .errors import SpecError
from .grid import Field2D, GridSpec1D, GridSpec2D

__all__ = [
    "MAGIC",
    "write_field_csv",
    "read_field_csv",
    "write_field_binary",
    "read_field_binary",
    "dumps_json",
    "reports_to_csv",
    "REPORT_CSV_COLUMNS",
]

MAGIC = b"WGF1"
_HEADER = struct.Struct("<4sddqddqB")
REPORT_CSV_COLUMNS = ("name", "state", "params", "lhs", "rhs", "margin", "error_estimate", "verdict")


def _clean(obj):
    # JSON has no inf/nan; encode them as strings so output stays valid.
    if isinstance(obj, float):
        if math.isfinite(obj):
            return obj
        return "inf" if obj > 0 else ("-inf" if obj < 0 else "nan")
    if isinstance(obj, dict):
        return {str(k): _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    if isinstance(obj, np.generic):
        return _clean(obj.item())
    return obj


def dumps_json(obj) -> str:
    """Deterministic JSON: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(_clean(obj), sort_keys=True, indent=2, allow_nan=False) + "\n"


def write_field_csv(field: Field2D, path) -> None:
    X, P = field.grid.mesh()
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        if field.is_complex:
            w.writerow(["x", "p", "re", "im"])
            for x, p, v in zip(X.ravel(), P.ravel(), field.values.ravel()):
                w.writerow([repr(float(x)), repr(float(p)), repr(float(v.real)), repr(float(v.imag))])
        else:
            w.writerow(["x", "p", "value"])
            for x, p, v in zip(X.ravel(), P.ravel(), field.values.ravel()):
                w.writerow([repr(float(x)), repr(float(p)), repr(float(v))])


def _axis_from(values: np.ndarray) -> GridSpec1D:
    u = np.unique(values)
    if u.size < 2:
        raise SpecError("field CSV needs at least two distinct coordinates per axis")
    step = (u[-1] - u[0]) / (u.size - 1)
    return GridSpec1D(float(u[0]), float(u[0] + step * u.size), int(u.size))


def read_field_csv(path) -> Field2D:
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows or rows[0][:2] != ["x", "p"]:
        raise SpecError(f"{path}: not a field CSV (expected header x,p,...)")
    data = np.array(rows[1:], dtype=float)
    xa, pa = _axis_from(data[:, 0]), _axis_from(data[:, 1])
    grid = GridSpec2D(xa, pa)
    vals = data[:, 2] + 1j * data[:, 3] if rows[0][2:] == ["re", "im"] else data[:, 2]
    return Field2D(grid, vals.reshape(grid.shape))


def write_field_binary(field: Field2D, path) -> None:
    g = field.grid
    header = _HEADER.pack(MAGIC, g.x_axis.x_min, g.x_axis.x_max, g.x_axis.n,
                          g.p_axis.x_min, g.p_axis.x_max, g.p_axis.n, int(field.is_complex))
    vals = np.ascontiguousarray(field.values)
    payload = vals.view(np.float64) if field.is_complex else vals.astype("<f8")
    with open(path, "wb") as fh:
        fh.write(header)
        fh.write(payload.astype("<f8").tobytes())


def read_field_binary(path) -> Field2D:
    raw = Path(path).read_bytes()
    if len(raw) < _HEADER.size or raw[:4] != MAGIC:
        raise SpecError(f"{path}: bad magic, not a field file")
    _, x0, x1, nx, p0, p1, npts, cplx = _HEADER.unpack_from(raw)
    grid = GridSpec2D(GridSpec1D(x0, x1, nx), GridSpec1D(p0, p1, npts))
    data = np.frombuffer(raw, dtype="<f8", offset=_HEADER.size)
    expected = nx * npts * (2 if cplx else 1)
    if data.size != expected:
        raise SpecError(f"{path}: payload has {data.size} doubles, expected {expected}")
    vals = data.view(np.complex128) if cplx else data
    return Field2D(grid, vals.reshape(grid.shape))


def reports_to_csv(rows: list[dict]) -> str:
    """CSV summary of report dicts with the fixed column order."""
    buf = _io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(REPORT_CSV_COLUMNS)
    for r in rows:
        params = json.dumps(_clean(r.get("params", {})), sort_keys=True)
        w.writerow([r.get("name", ""), r.get("state", ""), params,
                    *(_clean(r.get(k, "")) for k in ("lhs", "rhs", "margin", "error_estimate")),
                    r.get("verdict", "")])
    return buf.getvalue()
