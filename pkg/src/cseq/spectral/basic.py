"""Exact spectral facts about the zero eigenvalue."""

from __future__ import annotations

from ..exact import Matrix, charpoly, null_space, rank
from .roots import trailing_zeros


def mult_zero(x: Matrix) -> int:
    """Algebraic multiplicity of 0, counted on the exact characteristic polynomial."""
    return trailing_zeros(charpoly(x))


def is_semisimple_zero(x: Matrix) -> bool:
    """``rank(X) == rank(X^2)``; vacuously true when 0 is not an eigenvalue."""
    return rank(x) == rank(x @ x)


def is_nilpotent(x: Matrix) -> bool:
    return mult_zero(x) == x.n


def zero_eigenspace(x: Matrix) -> list[tuple]:
    """Exact basis of the generalized eigenspace ``null(X^n)``."""
    return null_space(x ** x.n)
