from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings

from cseq.exact import Matrix, charpoly, det, inverse, make, null_space, rank, span_rank
from cseq.exact.poly import evaluate as poly_eval

from conftest import gaussian_matrix, int_matrix, leibniz_det, matrices_st, rational_matrix

NILPOTENT_JORDAN = Matrix([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
SUB_B = Matrix([[1, 0, 0], [0, 0, 1], [0, 0, 0]])


def brute_rank(m: Matrix) -> int:
    """Size of the largest nonzero minor."""
    rows, cols = len(m.rows), len(m.rows[0])
    for k in range(min(rows, cols), 0, -1):
        for ri in combinations(range(rows), k):
            for ci in combinations(range(cols), k):
                if leibniz_det([[m.rows[i][j] for j in ci] for i in ri]) != 0:
                    return k
    return 0


class TestDet:
    def test_identity(self):
        assert det(Matrix.identity(3)) == 1

    def test_substituted_nonsingular(self):
        assert det(Matrix([[1, 0, 0], [0, 1, 1], [0, 0, 1]])) == 1

    def test_substituted_singular(self):
        assert det(Matrix([[1, 0, 0], [0, 0, 1], [0, 0, 1]])) == 0

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_matches_permutation_expansion(self, n):
        rng = random.Random(n)
        for make_m in (int_matrix, rational_matrix, gaussian_matrix):
            for _ in range(6):
                m = make_m(n, rng)
                assert det(m) == leibniz_det(m.rows)

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_multiplicative(self, n):
        rng = random.Random(100 + n)
        for _ in range(5):
            x, y = int_matrix(n, rng), gaussian_matrix(n, rng)
            assert det(x @ y) == det(x) * det(y)

    def test_needs_pivot_swap(self):
        assert det(Matrix([[0, 1], [1, 0]])) == -1

    def test_repeatable(self):
        m = rational_matrix(5, random.Random(7))
        assert det(m) == det(m)


class TestRank:
    def test_zero(self):
        assert rank(Matrix.zeros(3)) == 0

    def test_nilpotent_jordan(self):
        assert rank(NILPOTENT_JORDAN) == 2

    def test_stacked_pair(self):
        stacked = NILPOTENT_JORDAN.vstack(SUB_B)
        assert (len(stacked.rows), len(stacked.rows[0])) == (6, 3)
        assert rank(stacked) == 3

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_largest_nonzero_minor(self, n):
        rng = random.Random(200 + n)
        for _ in range(8):
            # low-rank products make the check non-trivial
            k = rng.randint(0, n)
            left = Matrix([[rng.randint(-2, 2) for _ in range(max(k, 1))] for _ in range(n)])
            right = Matrix([[rng.randint(-2, 2) for _ in range(n)] for _ in range(max(k, 1))])
            m = left @ right if k else Matrix.zeros(n)
            assert rank(m) == brute_rank(m)

    @settings(max_examples=60, deadline=None)
    @given(matrices_st(1, 5, gaussian=True))
    def test_rank_nullity(self, m):
        ns = null_space(m)
        assert rank(m) + len(ns) == m.n
        for v in ns:
            assert all(x == 0 for x in m.apply(v))
        assert span_rank(ns) == len(ns)


class TestNullSpace:
    def test_identity(self):
        assert null_space(Matrix.identity(2)) == []

    def test_zero(self):
        ns = null_space(Matrix.zeros(2))
        assert len(ns) == 2 and span_rank(ns) == 2

    def test_nilpotent_2x2(self):
        (v,) = null_space(Matrix([[0, 1], [0, 0]]))
        assert v[1] == 0 and v[0] != 0


class TestCharpoly:
    def test_zero(self):
        assert charpoly(Matrix.zeros(2)) == [1, 0, 0]

    def test_nilpotent_jordan(self):
        assert charpoly(NILPOTENT_JORDAN) == [1, 0, 0, 0]

    def test_swap_block(self):
        # lambda^3 - lambda
        assert charpoly(Matrix([[0, 1, 0], [1, 0, 0], [0, 0, 0]])) == [1, 0, -1, 0]

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_matches_det_of_shifted_matrix(self, n):
        """det(xI - A) by permutation expansion at n+1 points pins a degree-n polynomial."""
        rng = random.Random(300 + n)
        for make_m in (int_matrix, gaussian_matrix):
            m = make_m(n, rng)
            cp = charpoly(m)
            for x in range(n + 1):
                shifted = (Matrix.identity(n).scale(x) - m).rows
                assert poly_eval(cp[::-1], x) == leibniz_det(shifted)

    @settings(max_examples=60, deadline=None)
    @given(matrices_st(1, 5, gaussian=True))
    def test_constant_term_and_trace(self, m):
        cp = charpoly(m)
        n = m.n
        assert cp[0] == 1 and len(cp) == n + 1
        assert cp[n] == (-1) ** n * det(m)
        assert cp[1] == -m.trace()


def test_inverse_round_trip():
    rng = random.Random(9)
    m = gaussian_matrix(4, rng)
    while det(m) == 0:
        m = gaussian_matrix(4, rng)
    assert m @ inverse(m) == Matrix.identity(4)


def test_gaussian_entries_exact():
    m = Matrix([[make(0, 1), 0], [0, make(0, -1)]])
    assert det(m) == 1
    assert charpoly(m) == [1, 0, 1]
    assert rank(m) == 2
    assert det(Matrix([[Fraction(1, 3), Fraction(1, 2)], [Fraction(2, 3), 1]])) == 0
