"""Immutable dense matrices over Q(i)."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .scalar import Scalar, as_scalar, format_scalar, to_complex

ZERO = Fraction(0)
ONE = Fraction(1)


class Matrix:
    """Dense row-major matrix of exact scalars.

    Square matrices are the normal case; rectangular ones are allowed so that
    stacked blocks such as ``[A; B]`` can go through ``rank``.
    """

    __slots__ = ("rows", "shape")

    def __init__(self, rows: Iterable[Iterable]):
        data = tuple(tuple(as_scalar(x) for x in row) for row in rows)
        if not data or not data[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(data[0])
        if any(len(r) != width for r in data):
            raise ValueError("ragged rows")
        self.rows: tuple[tuple[Scalar, ...], ...] = data
        self.shape = (len(data), width)

    @classmethod
    def _trusted(cls, rows) -> Matrix:
        # Skips coercion; callers guarantee canonical scalars.
        m = object.__new__(cls)
        m.rows = tuple(tuple(r) for r in rows)
        m.shape = (len(m.rows), len(m.rows[0]))
        return m

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls._trusted([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int, m: int | None = None) -> Matrix:
        return cls._trusted([[ZERO] * (n if m is None else m) for _ in range(n)])

    @classmethod
    def diag(cls, values: Sequence) -> Matrix:
        vals = [as_scalar(v) for v in values]
        n = len(vals)
        return cls._trusted([[vals[i] if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence]) -> Matrix:
        return cls(list(zip(*cols)))

    @property
    def n(self) -> int:
        if self.shape[0] != self.shape[1]:
            raise ValueError(f"matrix is not square: shape {self.shape}")
        return self.shape[0]

    @property
    def is_square(self) -> bool:
        return self.shape[0] == self.shape[1]

    def __getitem__(self, ij: tuple[int, int]) -> Scalar:
        i, j = ij
        return self.rows[i][j]

    def row(self, i: int) -> tuple[Scalar, ...]:
        return self.rows[i]

    def col(self, j: int) -> tuple[Scalar, ...]:
        return tuple(r[j] for r in self.rows)

    def entries(self) -> list[Scalar]:
        return [x for r in self.rows for x in r]

    @property
    def T(self) -> Matrix:
        return Matrix._trusted(zip(*self.rows))

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(format_scalar(x) for x in r) + "]" for r in self.rows)
        return f"Matrix([{body}])"

    def _check_same_shape(self, other: Matrix) -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")

    def __add__(self, other: Matrix) -> Matrix:
        self._check_same_shape(other)
        return Matrix._trusted(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def __sub__(self, other: Matrix) -> Matrix:
        self._check_same_shape(other)
        return Matrix._trusted(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def __neg__(self) -> Matrix:
        return Matrix._trusted([[-a for a in r] for r in self.rows])

    def scale(self, c) -> Matrix:
        c = as_scalar(c)
        return Matrix._trusted([[c * a for a in r] for r in self.rows])

    def __rmul__(self, c) -> Matrix:
        return self.scale(c)

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.shape[1] != other.shape[0]:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.rows))
        return Matrix._trusted(
            [[sum((a * b for a, b in zip(r, c)), ZERO) for c in cols] for r in self.rows]
        )

    def apply(self, v: Sequence[Scalar]) -> tuple[Scalar, ...]:
        """Matrix-vector product."""
        if len(v) != self.shape[1]:
            raise ValueError("vector length mismatch")
        return tuple(sum((a * b for a, b in zip(r, v)), ZERO) for r in self.rows)

    def __pow__(self, k: int) -> Matrix:
        n = self.n
        result = Matrix.identity(n)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def trace(self) -> Scalar:
        return sum((self.rows[i][i] for i in range(self.n)), ZERO)

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
        return Matrix._trusted([[self.rows[i][j] for j in cols] for i in rows])

    def direct_sum(self, other: Matrix) -> Matrix:
        (r1, c1), (r2, c2) = self.shape, other.shape
        top = [list(r) + [ZERO] * c2 for r in self.rows]
        bottom = [[ZERO] * c1 + list(r) for r in other.rows]
        return Matrix._trusted(top + bottom)

    def hstack(self, other: Matrix) -> Matrix:
        if self.shape[0] != other.shape[0]:
            raise ValueError("row count mismatch")
        return Matrix._trusted([ra + rb for ra, rb in zip(self.rows, other.rows)])

    def vstack(self, other: Matrix) -> Matrix:
        if self.shape[1] != other.shape[1]:
            raise ValueError("column count mismatch")
        return Matrix._trusted(self.rows + other.rows)

    def with_row(self, i: int, row: Sequence[Scalar]) -> Matrix:
        rows = list(self.rows)
        rows[i] = tuple(row)
        return Matrix._trusted(rows)

    def is_real(self) -> bool:
        return all(isinstance(x, Fraction) for r in self.rows for x in r)

    def to_numpy(self) -> np.ndarray:
        if self.is_real():
            return np.array([[float(x) for x in r] for r in self.rows], dtype=float)
        return np.array([[to_complex(x) for x in r] for r in self.rows], dtype=complex)


def block_diag(*blocks: Matrix) -> Matrix:
    out = blocks[0]
    for b in blocks[1:]:
        out = out.direct_sum(b)
    return out
