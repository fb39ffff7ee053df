"""Dense complex matrices, tolerance policy, and the JSON wire format.

Every operation in this package works on square complex128 arrays.  The
helpers here validate shapes and entries once at the boundary so the
numerical modules can assume well-formed input.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import IO, Union

import numpy as np

ComplexMatrix = np.ndarray


class ShapeError(ValueError):
    """Operands have incompatible or invalid shapes."""


class MatrixFormatError(ValueError):
    """A matrix document is malformed: bad JSON, shape mismatch, or non-finite entry."""


@dataclass(frozen=True)
class ToleranceConfig:
    """Single tolerance policy threaded through all modules.

    atol: absolute comparison floor.
    rtol: relative comparison factor, scaled by the largest entry involved.
    rank_rtol: singular/eigenvalue cutoff relative to the largest one; values
        below the cutoff are treated as exactly zero everywhere.
    """

    atol: float = 1e-10
    rtol: float = 1e-8
    rank_rtol: float = 1e-10

    def __post_init__(self):
        for name in ("atol", "rtol", "rank_rtol"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be nonnegative")


DEFAULT_TOL = ToleranceConfig()


def as_matrix(values) -> ComplexMatrix:
    """Coerce to a 2-D complex128 array and validate entries are finite."""
    m = np.asarray(values, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] < 1 or m.shape[1] < 1:
        raise ShapeError(f"expected a 2-D matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m.real)) or not np.all(np.isfinite(m.imag)):
        raise MatrixFormatError("matrix contains a non-finite entry")
    return m


def check_square(m: ComplexMatrix, name: str = "matrix") -> ComplexMatrix:
    if m.shape[0] != m.shape[1]:
        raise ShapeError(f"{name} must be square, got shape {m.shape}")
    return m


def check_same_shape(m: ComplexMatrix, n: ComplexMatrix) -> None:
    if m.shape != n.shape:
        raise ShapeError(f"shape mismatch: {m.shape} vs {n.shape}")


def read_matrix(source: Union[bytes, str, IO]) -> ComplexMatrix:
    """Parse a matrix from the JSON wire format.

    The document is ``{"rows": R, "cols": C, "data": [[[re, im], ...], ...]}``
    with ``data`` holding R rows of C entries each.  Entries are read literally
    as float64 pairs; no rounding beyond the JSON float parse.
    """
    if hasattr(source, "read"):
        source = source.read()
    if isinstance(source, bytes):
        source = source.decode("utf-8")
    try:
        doc = json.loads(source)
    except json.JSONDecodeError as exc:
        raise MatrixFormatError(f"malformed JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise MatrixFormatError("top-level JSON value must be an object")
    try:
        rows, cols, data = int(doc["rows"]), int(doc["cols"]), doc["data"]
    except (KeyError, TypeError, ValueError) as exc:
        raise MatrixFormatError(f"missing or invalid field: {exc}") from exc
    if rows < 1 or cols < 1:
        raise MatrixFormatError("rows and cols must be positive")
    if not isinstance(data, list) or len(data) != rows:
        raise MatrixFormatError(f"declared {rows} rows, data has {len(data) if isinstance(data, list) else 'no'} rows")
    out = np.empty((rows, cols), dtype=np.complex128)
    for i, row in enumerate(data):
        if not isinstance(row, list) or len(row) != cols:
            raise MatrixFormatError(f"row {i}: declared {cols} cols, got {len(row) if isinstance(row, list) else 'no list'}")
        for j, entry in enumerate(row):
            if not isinstance(entry, list) or len(entry) != 2:
                raise MatrixFormatError(f"entry ({i},{j}): expected [re, im] pair")
            re, im = entry
            if not isinstance(re, (int, float)) or not isinstance(im, (int, float)) or isinstance(re, bool) or isinstance(im, bool):
                raise MatrixFormatError(f"entry ({i},{j}): components must be numbers")
            out[i, j] = complex(re, im)
    if not np.all(np.isfinite(out.real)) or not np.all(np.isfinite(out.imag)):
        raise MatrixFormatError("matrix contains a non-finite entry")
    return out


def matrix_to_obj(m: ComplexMatrix) -> dict:
    """Matrix as a JSON-serializable object in the wire format."""
    return {
        "rows": int(m.shape[0]),
        "cols": int(m.shape[1]),
        "data": [[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(m, dtype=np.complex128)],
    }


def write_matrix(m: ComplexMatrix) -> str:
    """Serialize to the JSON wire format.  Round-trips bit-exactly through read_matrix."""
    return json.dumps(matrix_to_obj(m))


def max_abs(m: ComplexMatrix) -> float:
    """Largest entry modulus (max-norm)."""
    return float(np.max(np.abs(m))) if m.size else 0.0


def approx_equal(m: ComplexMatrix, n: ComplexMatrix, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    """Entrywise closeness: max |M-N| <= atol + rtol * max(|M|_max, |N|_max)."""
    check_same_shape(m, n)
    bound = tol.atol + tol.rtol * max(max_abs(m), max_abs(n))
    return max_abs(m - n) <= bound
