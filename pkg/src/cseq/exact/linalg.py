"""Exact dense linear algebra over Q(i).

Pivot rule everywhere: the first nonzero entry at or below the current row,
scanning columns left to right.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .matrix import ONE, ZERO, Matrix
from .scalar import Scalar

Vector = tuple


def det(m: Matrix) -> Scalar:
    """Determinant by Bareiss fraction-free elimination.

    Every division in the loop is exact; with integer entries all
    intermediates stay integral.
    """
    n = m.n
    a = [list(r) for r in m.rows]
    sign = 1
    prev: Scalar = ONE
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return ZERO
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) / prev
        prev = akk
    d = a[n - 1][n - 1]
    return d if sign > 0 else -d


def rref(m: Matrix) -> tuple[list[list[Scalar]], list[int]]:
    """Reduced row echelon form and the pivot column indices."""
    rows, cols = m.shape
    a = [list(r) for r in m.rows]
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = ONE / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m: Matrix) -> int:
    """Exact rank; works for rectangular matrices too."""
    return len(rref(m)[1])


def null_space(m: Matrix) -> list[Vector]:
    """Basis of the right null space, one vector per free column."""
    cols = m.shape[1]
    a, pivots = rref(m)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * cols
        v[f] = ONE
        for r, pc in enumerate(pivots):
            v[pc] = -a[r][f]
        basis.append(tuple(v))
    return basis


def inverse(m: Matrix) -> Matrix:
    n = m.n
    a, pivots = rref(m.hstack(Matrix.identity(n)))
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return Matrix._trusted([row[n:] for row in a])


def span_rank(vectors: Sequence[Sequence[Scalar]]) -> int:
    """Dimension of the span of ``vectors``."""
    if not vectors:
        return 0
    return rank(Matrix.from_columns(vectors))


def charpoly(m: Matrix) -> list[Scalar]:
    """Coefficients ``[1, c1, ..., cn]`` of ``det(x I - m)``, highest power first.

    Berkowitz's algorithm: division-free, so exact over any commutative ring.
    """
    n = m.n
    a = m.rows
    # Characteristic vector of the trailing 1x1 block, then grow leftwards.
    vec: list[Scalar] = [ONE, -a[n - 1][n - 1]]
    for k in range(n - 2, -1, -1):
        size = n - k  # size of the block starting at (k, k)
        r = a[k][k + 1:]
        c = [a[i][k] for i in range(k + 1, n)]
        sub = [row[k + 1:] for row in a[k + 1:]]
        toeplitz_col: list[Scalar] = [ONE, -a[k][k]]
        w = c
        for _ in range(size - 1):
            toeplitz_col.append(-sum((x * y for x, y in zip(r, w)), ZERO))
            w = [sum((x * y for x, y in zip(row, w)), ZERO) for row in sub]
        new = []
        for i in range(size + 1):
            acc: Scalar = ZERO
            for j in range(min(i + 1, size)):
                acc += toeplitz_col[i - j] * vec[j]
            new.append(acc)
        vec = new
    return [Fraction(x) if isinstance(x, int) else x for x in vec]
