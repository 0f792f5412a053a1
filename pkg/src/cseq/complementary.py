"""Row-substitution structure between two matrices.

``structured_matrix(A, B, S)`` is A with every row ``i in S`` replaced by row
``i`` of B. A pair is r-complementary when some pattern of exactly ``r``
rows gives a nonsingular result; ``theta`` sums the determinants over all
such patterns. Indices in patterns are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable

from .bivar import _check_pair
from .criterion import CsVerdict, cs_direct
from .exact import Matrix, Scalar, det, rank
from .flags import Flag
from .spectral.basic import is_semisimple_zero, mult_zero


@dataclass(frozen=True, order=True)
class SubstitutionPattern:
    indices: tuple[int, ...]

    @classmethod
    def of(cls, indices: Iterable[int], n: int | None = None) -> SubstitutionPattern:
        raw = list(indices)
        idx = tuple(sorted(set(raw)))
        if len(idx) != len(raw):
            raise ValueError(f"repeated indices in pattern {raw}")
        if any(i < 1 or (n is not None and i > n) for i in idx):
            raise ValueError(f"pattern {raw} has indices outside 1..{n}")
        return cls(idx)

    def __len__(self) -> int:
        return len(self.indices)


def structured_matrix(a: Matrix, b: Matrix, pattern) -> Matrix:
    n = _check_pair(a, b)
    if not isinstance(pattern, SubstitutionPattern):
        pattern = SubstitutionPattern.of(pattern, n)
    elif any(i < 1 or i > n for i in pattern.indices):
        raise ValueError(f"pattern {pattern.indices} has indices outside 1..{n}")
    chosen = set(pattern.indices)
    return Matrix._trusted([b.rows[i] if i + 1 in chosen else a.rows[i] for i in range(n)])


@dataclass(frozen=True)
class ComplementaryReport:
    r: int
    witnesses: tuple[SubstitutionPattern, ...]
    theta: Scalar
    determinants: tuple[tuple[SubstitutionPattern, Scalar], ...] = ()

    @property
    def is_complementary(self) -> bool:
        return bool(self.witnesses)


def is_r_complementary(a: Matrix, b: Matrix, r: int, columns: bool = False) -> ComplementaryReport:
    """Enumerate all ``C(n, r)`` patterns in lexicographic order.

    ``columns=True`` substitutes columns instead of rows (both inputs are
    transposed first).
    """
    n = _check_pair(a, b)
    if not 0 <= r <= n:
        raise ValueError(f"r must be in 0..{n}, got {r}")
    if columns:
        a, b = a.T, b.T
    theta: Scalar = Fraction(0)
    witnesses, dets = [], []
    for combo in combinations(range(1, n + 1), r):
        pat = SubstitutionPattern(combo)
        d = det(structured_matrix(a, b, pat))
        dets.append((pat, d))
        theta += d
        if d != 0:
            witnesses.append(pat)
    return ComplementaryReport(r, tuple(witnesses), theta, tuple(dets))


@dataclass
class Prop4Report:
    status: Flag
    unmet: list[str] = field(default_factory=list)
    r: int | None = None
    theta: Scalar | None = None
    mult_zero_A: int | None = None
    mult_zero_B: int | None = None
    cs_holds: bool | None = None
    complementary: ComplementaryReport | None = None


def _prop4_one_way(a: Matrix, b: Matrix, verdict: CsVerdict) -> Prop4Report:
    n = a.n
    ma, mb = mult_zero(a), mult_zero(b)
    r = n - mb
    comp = is_r_complementary(a, b, r)
    report = Prop4Report(Flag.NA, [], r, comp.theta, ma, mb, verdict.holds, comp)
    if ma == 0:
        report.unmet.append("A is nonsingular")
    if mb == 0:
        report.unmet.append("B is nonsingular")
    if not comp.is_complementary:
        report.unmet.append(f"not {r}-complementary")
    if comp.theta == 0:
        report.unmet.append("theta == 0")
    if not verdict.holds:
        report.unmet.append("CS does not hold")
    if not report.unmet:
        report.status = Flag.of(ma + mb == n)
    return report


def check_prop4(a: Matrix, b: Matrix, verdict: CsVerdict | None = None) -> tuple[Prop4Report, Prop4Report]:
    """``m_A(0) + m_B(0) == n`` under the complementarity hypotheses.

    Returns the direct check (A against B with ``r = n - m_B(0)``) and the
    mirrored one (B against A with ``r = n - m_A(0)``).
    """
    _check_pair(a, b)
    v = verdict if verdict is not None else cs_direct(a, b)
    return _prop4_one_way(a, b, v), _prop4_one_way(b, a, v)


def check_cor1(a: Matrix, b: Matrix, prop4: Prop4Report | None = None) -> dict[str, Flag]:
    """Rank consequences once the complementarity hypotheses hold.

    ``I``: both zeros semisimple implies ``rank A + rank B == n``.
    ``II``: zero semisimple for A implies ``rank A == m_B(0)``.
    """
    if prop4 is None:
        prop4 = check_prop4(a, b)[0]
    if prop4.status is Flag.NA:
        return {"I": Flag.NA, "II": Flag.NA}
    n = a.n
    ra, rb = rank(a), rank(b)
    ss_a, ss_b = is_semisimple_zero(a), is_semisimple_zero(b)
    return {
        "I": Flag.of(ra + rb == n) if ss_a and ss_b else Flag.NA,
        "II": Flag.of(ra == prop4.mult_zero_B) if ss_a else Flag.NA,
    }
