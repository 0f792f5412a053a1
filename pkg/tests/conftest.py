from __future__ import annotations

import random
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import strategies as st

from cseq.exact import Matrix, make


def leibniz_det(rows):
    """Permutation expansion; slow but independent of any elimination code."""
    n = len(rows)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = Fraction(-1) ** inversions
        for i, j in enumerate(perm):
            term = term * rows[i][j]
        total = total + term
    return total


def int_matrix(n: int, rng: random.Random, lo: int = -3, hi: int = 3) -> Matrix:
    return Matrix([[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)])


def gaussian_matrix(n: int, rng: random.Random) -> Matrix:
    return Matrix([[make(rng.randint(-2, 2), rng.randint(-2, 2)) for _ in range(n)] for _ in range(n)])


def rational_matrix(n: int, rng: random.Random) -> Matrix:
    return Matrix([[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(n)] for _ in range(n)])


fractions_st = st.fractions(min_value=-50, max_value=50, max_denominator=20)
scalars_st = st.one_of(fractions_st, st.builds(make, fractions_st, fractions_st))


@st.composite
def matrices_st(draw, n_min: int = 1, n_max: int = 4, gaussian: bool = False):
    n = draw(st.integers(n_min, n_max))
    elem = st.builds(make, st.integers(-3, 3), st.integers(-2, 2)) if gaussian else st.integers(-3, 3)
    return Matrix([[draw(elem) for _ in range(n)] for _ in range(n)])


@st.composite
def pairs_st(draw, n_min: int = 1, n_max: int = 4):
    n = draw(st.integers(n_min, n_max))
    cell = st.integers(-3, 3)
    a = Matrix([[draw(cell) for _ in range(n)] for _ in range(n)])
    b = Matrix([[draw(cell) for _ in range(n)] for _ in range(n)])
    return a, b


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.report_lines():
        terminalreporter.write_line(line)
