"""Coefficient grid of ``f(s, t) = det(I - sA - tB)``.

``coeffs[p][q]`` is the coefficient of ``s**p * t**q``. Two independent
constructions are provided: exact interpolation on an integer node grid, and
direct assembly from sums of mixed principal minors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .exact import Matrix, Scalar, as_scalar, charpoly, det, inverse

ZERO = Fraction(0)


def _check_pair(a: Matrix, b: Matrix) -> int:
    if not (a.is_square and b.is_square) or a.n != b.n:
        raise ValueError(f"A and B must be square of equal size, got {a.shape} and {b.shape}")
    return a.n


@dataclass(frozen=True)
class BivarPolynomial:
    n: int
    coeffs: tuple[tuple[Scalar, ...], ...]

    def __call__(self, s, t) -> Scalar:
        s, t = as_scalar(s), as_scalar(t)
        total: Scalar = ZERO
        for row in reversed(self.coeffs):
            inner: Scalar = ZERO
            for c in reversed(row):
                inner = inner * t + c
            total = total * s + inner
        return total

    def __getitem__(self, pq: tuple[int, int]) -> Scalar:
        p, q = pq
        return self.coeffs[p][q]

    def as_matrix(self) -> Matrix:
        return Matrix(self.coeffs)

    def transpose(self) -> BivarPolynomial:
        return BivarPolynomial(self.n, tuple(zip(*self.coeffs)))

    def row(self, p: int) -> tuple[Scalar, ...]:
        return self.coeffs[p]

    def col(self, q: int) -> tuple[Scalar, ...]:
        return tuple(r[q] for r in self.coeffs)

    def check_invariants(self) -> list[str]:
        """Names of violated structural invariants (empty when all hold)."""
        problems = []
        if self.coeffs[0][0] != 1:
            problems.append("m_00 != 1")
        for p in range(self.n + 1):
            for q in range(self.n + 1):
                if p + q > self.n and self.coeffs[p][q] != 0:
                    problems.append(f"m_{p}{q} != 0 above total degree n")
        return problems


def evaluate(a: Matrix, b: Matrix, s, t) -> Scalar:
    """``det(I - sA - tB)`` exactly."""
    n = _check_pair(a, b)
    s, t = as_scalar(s), as_scalar(t)
    m = Matrix.identity(n) - a.scale(s) - b.scale(t)
    return det(m)


def _vandermonde(nodes: Sequence[int]) -> Matrix:
    return Matrix([[Fraction(x) ** k for k in range(len(nodes))] for x in nodes])


def coeff_grid_interp(a: Matrix, b: Matrix) -> BivarPolynomial:
    """Grid recovered from values of ``f`` on the nodes ``0..n`` in each variable.

    With ``V[i][p] = i**p`` the value table is ``F = V M V^T``, so
    ``M = V^-1 F V^-T``: one Vandermonde inverse applied on each side.
    """
    n = _check_pair(a, b)
    nodes = range(n + 1)
    values = Matrix([[evaluate(a, b, s, t) for t in nodes] for s in nodes])
    vinv = inverse(_vandermonde(list(nodes)))
    grid = vinv @ values @ vinv.T
    return BivarPolynomial(n, grid.rows)


def _check_index_set(idx: Iterable[int], n: int, name: str) -> tuple[int, ...]:
    out = tuple(sorted(set(idx)))
    if len(out) != len(list(idx)):
        raise ValueError(f"{name} has repeated indices")
    for i in out:
        if not 1 <= i <= n:
            raise ValueError(f"{name} index {i} out of range 1..{n}")
    return out


def mixed_minor(a: Matrix, b: Matrix, rows_a: Iterable[int], rows_b: Iterable[int]) -> Scalar:
    """Principal minor on ``rows_a | rows_b`` with rows taken from A or B.

    Indices are 1-based. The submatrix keeps the union in ascending order;
    row ``i`` comes from ``A`` if ``i in rows_a`` and from ``B`` otherwise.
    The empty minor is 1.
    """
    n = _check_pair(a, b)
    rows_a, rows_b = list(rows_a), list(rows_b)
    ia = _check_index_set(rows_a, n, "rows_a")
    ib = _check_index_set(rows_b, n, "rows_b")
    if set(ia) & set(ib):
        raise ValueError(f"rows_a and rows_b overlap: {sorted(set(ia) & set(ib))}")
    return _mixed_minor0(a, b, [i - 1 for i in ia], [j - 1 for j in ib])


def _mixed_minor0(a: Matrix, b: Matrix, ia: Sequence[int], ib: Sequence[int]) -> Scalar:
    idx = sorted(list(ia) + list(ib))
    if not idx:
        return Fraction(1)
    from_a = set(ia)
    rows = [[(a if i in from_a else b).rows[i][j] for j in idx] for i in idx]
    return det(Matrix._trusted(rows))


def mixed_minor_sum(a: Matrix, b: Matrix, p: int, q: int) -> Scalar:
    """Sum of all mixed principal minors with ``p`` rows from A and ``q`` from B."""
    n = _check_pair(a, b)
    total: Scalar = ZERO
    if p + q > n:
        return total
    for support in combinations(range(n), p + q):
        for ia in combinations(support, p):
            ib = [i for i in support if i not in ia]
            total += _mixed_minor0(a, b, ia, ib)
    return total


def principal_minor_sum(x: Matrix, p: int) -> Scalar:
    """Sum of all ``p x p`` principal minors of ``x``."""
    n = x.n
    if p == 0:
        return Fraction(1)
    return sum((det(x.submatrix(idx, idx)) for idx in combinations(range(n), p)), ZERO)


def coeff_grid_minors(a: Matrix, b: Matrix) -> BivarPolynomial:
    """Grid with ``m_pq = (-1)**(p+q) * mixed_minor_sum(A, B, p, q)``.

    Cost grows like ``3**n`` determinants; meant for n up to about 8.
    """
    n = _check_pair(a, b)
    grid = [[ZERO] * (n + 1) for _ in range(n + 1)]
    for size in range(n + 1):
        for p in range(size + 1):
            q = size - p
            val = mixed_minor_sum(a, b, p, q)
            grid[p][q] = val if size % 2 == 0 else -val
    return BivarPolynomial(n, tuple(tuple(r) for r in grid))


def univariate_coeffs(x: Matrix) -> tuple[Scalar, ...]:
    """Coefficients of ``det(I - s X)`` in ascending powers of ``s``.

    These are the characteristic polynomial coefficients ``[1, c1, ..., cn]``
    of ``det(lambda I - X)`` read in the same order.
    """
    return tuple(charpoly(x))


coeff_grid = coeff_grid_interp
