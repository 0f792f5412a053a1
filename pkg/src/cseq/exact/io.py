"""JSON matrix file format.

A matrix is ``{"n": 3, "entries": [["1", "0", "1/2"], ...]}``; entries are
strings such as ``"p"``, ``"p/q"`` or ``"p/q+r/s i"``. A pair file holds
``{"A": <matrix>, "B": <matrix>}``.
"""

from __future__ import annotations

import json
from pathlib import Path

from .matrix import Matrix
from .scalar import format_scalar, parse_scalar


class MatrixFormatError(ValueError):
    """Bad matrix file; ``str()`` carries the source, location and line when known."""

    def __init__(self, message: str, source: str = "<input>", line: int | None = None):
        self.source = source
        self.line = line
        where = f"{source}:{line}" if line is not None else source
        super().__init__(f"{where}: {message}")


def _line_of(text: str | None, token: str) -> int | None:
    if not text:
        return None
    idx = text.find(f'"{token}"')
    if idx < 0:
        idx = text.find(token)
    return text.count("\n", 0, idx) + 1 if idx >= 0 else None


def matrix_from_obj(obj, source: str = "<input>", text: str | None = None, label: str = "") -> Matrix:
    prefix = f"{label}." if label else ""
    if not isinstance(obj, dict) or "entries" not in obj:
        raise MatrixFormatError(f"{prefix or 'matrix '}object must have 'n' and 'entries'", source)
    entries = obj["entries"]
    n = obj.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise MatrixFormatError(f"{prefix}n must be a positive integer, got {n!r}", source, _line_of(text, '"n"'))
    if not isinstance(entries, list) or len(entries) != n:
        raise MatrixFormatError(f"{prefix}entries must be a list of {n} rows", source, _line_of(text, '"entries"'))
    rows = []
    for i, row in enumerate(entries):
        if not isinstance(row, list) or len(row) != n:
            raise MatrixFormatError(f"{prefix}entries[{i}] must have {n} entries (matrix must be square)", source)
        parsed = []
        for j, x in enumerate(row):
            if isinstance(x, int) and not isinstance(x, bool):
                x = str(x)
            if not isinstance(x, str):
                raise MatrixFormatError(f"{prefix}entries[{i}][{j}]: expected a string scalar, got {x!r}", source)
            try:
                parsed.append(parse_scalar(x))
            except ValueError as exc:
                raise MatrixFormatError(f"{prefix}entries[{i}][{j}] = {x!r}: {exc}", source, _line_of(text, x)) from None
        rows.append(parsed)
    return Matrix(rows)


def matrix_to_obj(m: Matrix) -> dict:
    return {"n": m.n, "entries": [[format_scalar(x) for x in r] for r in m.rows]}


def _load_json(path: Path) -> tuple[object, str]:
    try:
        text = path.read_text()
    except OSError as exc:
        raise MatrixFormatError(f"cannot read file: {exc.strerror}", str(path)) from None
    try:
        return json.loads(text), text
    except json.JSONDecodeError as exc:
        raise MatrixFormatError(f"invalid JSON: {exc.msg}", str(path), exc.lineno) from None


def load_matrix(path) -> Matrix:
    path = Path(path)
    obj, text = _load_json(path)
    return matrix_from_obj(obj, str(path), text)


def load_pair(*paths) -> tuple[Matrix, Matrix]:
    """Load ``(A, B)`` from one pair file or two single-matrix files."""
    if len(paths) == 1:
        path = Path(paths[0])
        obj, text = _load_json(path)
        if not isinstance(obj, dict) or "A" not in obj or "B" not in obj:
            raise MatrixFormatError("pair file must contain 'A' and 'B'", str(path))
        a = matrix_from_obj(obj["A"], str(path), text, "A")
        b = matrix_from_obj(obj["B"], str(path), text, "B")
    elif len(paths) == 2:
        a, b = load_matrix(paths[0]), load_matrix(paths[1])
        path = Path(paths[1])
    else:
        raise MatrixFormatError(f"expected 1 or 2 files, got {len(paths)}")
    if a.n != b.n:
        raise MatrixFormatError(f"dimension mismatch: A is {a.n}x{a.n}, B is {b.n}x{b.n}", str(path))
    return a, b


def pair_to_obj(a: Matrix, b: Matrix) -> dict:
    return {"A": matrix_to_obj(a), "B": matrix_to_obj(b)}


def dumps_pair(a: Matrix, b: Matrix) -> str:
    return json.dumps(pair_to_obj(a, b), indent=2) + "\n"
