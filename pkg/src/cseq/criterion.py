"""Three independent decisions of ``det(I-sA-tB) == det(I-sA) * det(I-tB)``."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .bivar import (
    BivarPolynomial,
    _check_pair,
    coeff_grid_interp,
    mixed_minor_sum,
    principal_minor_sum,
    univariate_coeffs,
)
from .exact import Matrix, Scalar, rank


class Witness(NamedTuple):
    """A coefficient where the grid differs from the product of the factors."""

    p: int
    q: int
    lhs: Scalar
    rhs: Scalar


@dataclass(frozen=True)
class CsVerdict:
    holds: bool
    rank_of_M: int
    factor_k: tuple[Scalar, ...] | None = None
    factor_l: tuple[Scalar, ...] | None = None
    witness: Witness | None = None
    method: str = "rank"


def _first_mismatch(grid: BivarPolynomial, k, l) -> Witness | None:
    for p, row in enumerate(grid.coeffs):
        for q, m in enumerate(row):
            prod = k[p] * l[q]
            if m != prod:
                return Witness(p, q, m, prod)
    return None


def cs_rank_test(grid: BivarPolynomial) -> CsVerdict:
    """Decide the property from ``rank(M) == 1``.

    Since ``m_00 == 1`` a rank-one grid is exactly the outer product of its
    first column and first row, which are then returned as the factors.
    """
    r = rank(grid.as_matrix())
    k, l = grid.col(0), grid.row(0)
    if r == 1:
        return CsVerdict(True, r, k, l, None, "rank")
    return CsVerdict(False, r, None, None, _first_mismatch(grid, k, l), "rank")


def cs_direct(a: Matrix, b: Matrix, grid: BivarPolynomial | None = None) -> CsVerdict:
    """Compare every ``m_pq`` with ``a_p * b_q`` from the two characteristic polynomials."""
    _check_pair(a, b)
    if grid is None:
        grid = coeff_grid_interp(a, b)
    ka, lb = univariate_coeffs(a), univariate_coeffs(b)
    witness = _first_mismatch(grid, ka, lb)
    r = rank(grid.as_matrix())
    if witness is None:
        return CsVerdict(True, r, ka, lb, None, "direct")
    return CsVerdict(False, r, None, None, witness, "direct")


def cs_identity_check(a: Matrix, b: Matrix) -> list[Witness]:
    """All ``(p, q)`` where the minor-sum identities fail.

    For ``p + q <= n`` the product of the pure principal-minor sums must equal
    the mixed-minor sum; beyond that the product itself must vanish. The
    witness's ``lhs`` is the product, ``rhs`` the mixed sum (or 0).
    """
    n = _check_pair(a, b)
    pure_a = [principal_minor_sum(a, p) for p in range(n + 1)]
    pure_b = [principal_minor_sum(b, q) for q in range(n + 1)]
    violations = []
    for p in range(n + 1):
        for q in range(n + 1):
            lhs = pure_a[p] * pure_b[q]
            rhs = mixed_minor_sum(a, b, p, q) if p + q <= n else Fraction(0)
            if lhs != rhs:
                violations.append(Witness(p, q, lhs, rhs))
    return violations


def outer(k, l) -> list[list[Scalar]]:
    return [[x * y for y in l] for x in k]
