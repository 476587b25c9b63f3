"""Dense symmetric nonnegative matrices and their text interchange format."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graphs import Graph

__all__ = [
    "SymNonnegMatrix",
    "MatrixFormatError",
    "parse_matrix_market",
    "adjacency_matrix",
    "frobenius_norm",
]

_SYM_TOL = 1e-12


class MatrixFormatError(ValueError):
    """Raised when matrix input violates the format or the nonnegativity
    / symmetry preconditions."""


@dataclass(frozen=True, eq=False)
class SymNonnegMatrix:
    """Dense real symmetric matrix with nonnegative entries.

    Storage is symmetrized on ingestion, so entries[i, j] == entries[j, i]
    holds exactly; the array is read-only.
    """

    ell: int
    entries: np.ndarray
    trace: float

    @classmethod
    def from_array(cls, a, *, sym_tol: float = _SYM_TOL) -> "SymNonnegMatrix":
        arr = np.array(a, dtype=float)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise MatrixFormatError(f"expected a square matrix, got shape {arr.shape}")
        ell = arr.shape[0]
        if ell < 1:
            raise MatrixFormatError("matrix order must be >= 1")
        if not np.all(np.isfinite(arr)):
            raise MatrixFormatError("matrix contains non-finite entries")
        scale = max(1.0, float(np.abs(arr).max(initial=0.0)))
        gap = float(np.abs(arr - arr.T).max(initial=0.0))
        if gap > sym_tol * scale:
            i, j = np.unravel_index(int(np.abs(arr - arr.T).argmax()), arr.shape)
            raise MatrixFormatError(
                f"matrix is not symmetric: entries ({i + 1},{j + 1}) and "
                f"({j + 1},{i + 1}) differ by {gap:g}"
            )
        sym = (arr + arr.T) / 2.0
        neg = np.argwhere(sym < 0.0)
        if neg.size:
            i, j = (int(x) for x in neg[0])
            raise MatrixFormatError(
                f"negative entry {sym[i, j]:g} at ({i + 1},{j + 1}); "
                "entries must be nonnegative"
            )
        sym.setflags(write=False)
        return cls(ell=ell, entries=sym, trace=float(np.trace(sym)))


def adjacency_matrix(g: Graph) -> SymNonnegMatrix:
    """0/1 adjacency matrix of a graph (zero diagonal, trace 0)."""
    a = np.zeros((g.n, g.n))
    for u, v in g.edges():
        a[u, v] = 1.0
        a[v, u] = 1.0
    a.setflags(write=False)
    return SymNonnegMatrix(ell=g.n, entries=a, trace=0.0)


def frobenius_norm(R: SymNonnegMatrix) -> float:
    """sqrt of the sum of squared entries; sqrt(2m) for an adjacency matrix."""
    return math.sqrt(float(np.sum(R.entries * R.entries)))


# ---------------------------------------------------------------------------
# Matrix Market


def parse_matrix_market(text: str) -> SymNonnegMatrix:
    """Parse Matrix Market text (coordinate or array, real field).

    Symmetric and general storage are accepted; a general body must be
    numerically symmetric to 1e-12 relative.  Pattern and complex fields,
    negative entries, and non-square shapes are rejected.
    """
    lines = text.splitlines()
    if not lines or not lines[0].startswith("%%MatrixMarket"):
        raise MatrixFormatError("missing %%MatrixMarket header line")
    header = lines[0].split()
    if len(header) != 5 or header[1].lower() != "matrix":
        raise MatrixFormatError(f"malformed header: {lines[0]!r}")
    fmt, field, symmetry = (w.lower() for w in header[2:5])
    if fmt not in ("coordinate", "array"):
        raise MatrixFormatError(f"unsupported format {fmt!r}")
    if field in ("complex", "pattern"):
        raise MatrixFormatError(f"unsupported field {field!r} (need real values)")
    if field not in ("real", "integer"):
        raise MatrixFormatError(f"unknown field {field!r}")
    if symmetry not in ("symmetric", "general"):
        raise MatrixFormatError(f"unsupported symmetry {symmetry!r}")

    body = [ln.strip() for ln in lines[1:]]
    body = [ln for ln in body if ln and not ln.startswith("%")]
    if not body:
        raise MatrixFormatError("missing size line")

    size = body[0].split()
    data = body[1:]
    if fmt == "coordinate":
        if len(size) != 3:
            raise MatrixFormatError("coordinate size line needs rows cols nnz")
        rows, cols, nnz = (_parse_int(tok, "size") for tok in size)
        _require_square(rows, cols)
        if len(data) != nnz:
            raise MatrixFormatError(f"expected {nnz} entries, found {len(data)}")
        a = np.zeros((rows, rows))
        seen: set[tuple[int, int]] = set()
        for ln in data:
            toks = ln.split()
            if len(toks) != 3:
                raise MatrixFormatError(f"bad coordinate entry: {ln!r}")
            i = _parse_int(toks[0], "row index")
            j = _parse_int(toks[1], "column index")
            v = _parse_real(toks[2])
            if not (1 <= i <= rows and 1 <= j <= rows):
                raise MatrixFormatError(f"entry ({i},{j}) out of range")
            if v < 0.0:
                raise MatrixFormatError(f"negative entry {v:g} at ({i},{j})")
            key = (i, j) if i <= j else (j, i)
            if symmetry == "symmetric":
                if key in seen:
                    raise MatrixFormatError(f"duplicate entry at ({i},{j})")
                seen.add(key)
                a[i - 1, j - 1] = v
                a[j - 1, i - 1] = v
            else:
                if (i, j) in seen:
                    raise MatrixFormatError(f"duplicate entry at ({i},{j})")
                seen.add((i, j))
                a[i - 1, j - 1] = v
        return SymNonnegMatrix.from_array(a)

    # array format: dense, column-major
    if len(size) != 2:
        raise MatrixFormatError("array size line needs rows cols")
    rows, cols = (_parse_int(tok, "size") for tok in size)
    _require_square(rows, cols)
    values = [_parse_real(tok) for ln in data for tok in ln.split()]
    a = np.zeros((rows, rows))
    if symmetry == "symmetric":
        # lower triangle (including diagonal) stored by columns
        expected = rows * (rows + 1) // 2
        if len(values) != expected:
            raise MatrixFormatError(
                f"symmetric array body needs {expected} values, found {len(values)}"
            )
        idx = 0
        for j in range(rows):
            for i in range(j, rows):
                a[i, j] = values[idx]
                a[j, i] = values[idx]
                idx += 1
    else:
        if len(values) != rows * rows:
            raise MatrixFormatError(
                f"array body needs {rows * rows} values, found {len(values)}"
            )
        idx = 0
        for j in range(rows):
            for i in range(rows):
                a[i, j] = values[idx]
                idx += 1
    neg = np.argwhere(a < 0.0)
    if neg.size:
        i, j = (int(x) for x in neg[0])
        raise MatrixFormatError(f"negative entry {a[i, j]:g} at ({i + 1},{j + 1})")
    return SymNonnegMatrix.from_array(a)


def to_matrix_market(R: SymNonnegMatrix) -> str:
    """Serialize as coordinate/real/symmetric Matrix Market text."""
    entries = []
    a = R.entries
    for i in range(R.ell):
        for j in range(i + 1):
            if a[i, j] != 0.0:
                entries.append((i + 1, j + 1, a[i, j]))
    out = ["%%MatrixMarket matrix coordinate real symmetric"]
    out.append(f"{R.ell} {R.ell} {len(entries)}")
    out.extend(f"{i} {j} {v!r}" for i, j, v in entries)
    return "\n".join(out) + "\n"


def _require_square(rows: int, cols: int) -> None:
    if rows != cols:
        raise MatrixFormatError(f"matrix must be square, got {rows}x{cols}")
    if rows < 1:
        raise MatrixFormatError("matrix order must be >= 1")


def _parse_int(tok: str, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise MatrixFormatError(f"invalid {what}: {tok!r}") from None


def _parse_real(tok: str) -> float:
    try:
        v = float(tok)
    except ValueError:
        raise MatrixFormatError(f"invalid numeric value: {tok!r}") from None
    if not math.isfinite(v):
        raise MatrixFormatError(f"non-finite value: {tok!r}")
    return v
