"""Generalized eigenspaces and Jordan structure.

Exact eigenvalues (including 0) are handled in exact arithmetic; irrational
ones fall back to SVD-based numerics with a relative singular-value cutoff.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..exact import GaussianRational, Matrix, Scalar, null_space, rank
from ..exact.scalar import to_complex
from .roots import Eigenvalue

TOL_RANK = 1e-9


def is_exact(lam) -> bool:
    return isinstance(lam, (int, Fraction, GaussianRational)) and not isinstance(lam, bool)


def numeric_rank(m: np.ndarray, tol: float = TOL_RANK) -> int:
    """Count singular values above ``tol`` times the largest one."""
    if m.size == 0:
        return 0
    sv = np.linalg.svd(m, compute_uv=False)
    if sv[0] == 0:
        return 0
    return int(np.sum(sv > tol * sv[0]))


def numeric_null_space(m: np.ndarray, tol: float = TOL_RANK) -> np.ndarray:
    """Orthonormal null-space basis as columns."""
    _, sv, vh = np.linalg.svd(m)
    r = 0 if sv[0] == 0 else int(np.sum(sv > tol * sv[0]))
    return vh[r:].conj().T


def orthonormal_columns(vectors, n: int, tol: float = TOL_RANK) -> np.ndarray:
    """Orthonormal basis (columns) for the span of ``vectors``."""
    if len(vectors) == 0:
        return np.zeros((n, 0), dtype=complex)
    mat = np.array([[to_complex(x) if not isinstance(x, complex) else x for x in v] for v in vectors],
                   dtype=complex).T
    u, sv, _ = np.linalg.svd(mat, full_matrices=False)
    r = 0 if sv[0] == 0 else int(np.sum(sv > tol * sv[0]))
    return u[:, :r]


def contains(basis_w: np.ndarray, u: np.ndarray, tol: float = TOL_RANK) -> bool:
    """``u`` lies in the column span of ``basis_w`` (rank test)."""
    norm = np.linalg.norm(u)
    if norm == 0:
        return True
    u = u / norm
    if basis_w.shape[1] == 0:
        return False
    return numeric_rank(np.column_stack([basis_w, u]), tol) == numeric_rank(basis_w, tol)


def _shift(x: Matrix, lam: Scalar) -> Matrix:
    return x - Matrix.identity(x.n).scale(lam)


@dataclass(frozen=True)
class EigenspaceBasis:
    eigenvalue: complex
    basis: np.ndarray
    order: int
    exact_basis: tuple[tuple[Scalar, ...], ...] | None = None

    @property
    def dim(self) -> int:
        return self.basis.shape[1]


def gen_eigenspace(x: Matrix, lam, tol: float = TOL_RANK) -> EigenspaceBasis:
    """Basis of ``null((X - lam I)**n)``.

    ``lam`` may be an exact scalar (exact null space, no tolerance) or a
    floating approximation of an eigenvalue (SVD with relative cutoff ``tol``).
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    n = x.n
    if is_exact(lam):
        vecs = null_space(_shift(x, Fraction(lam) if isinstance(lam, int) else lam) ** n)
        basis = np.array([[to_complex(c) for c in v] for v in vecs], dtype=complex).reshape(len(vecs), n).T
        return EigenspaceBasis(to_complex(lam) if not isinstance(lam, int) else complex(lam), basis, n, tuple(vecs))
    lam = complex(lam)
    shifted = np.linalg.matrix_power(x.to_numpy().astype(complex) - lam * np.eye(n), n)
    return EigenspaceBasis(lam, numeric_null_space(shifted, tol), n)


def eigenspace_of(x: Matrix, ev: Eigenvalue, tol: float = TOL_RANK) -> EigenspaceBasis:
    return gen_eigenspace(x, ev.exact if ev.exact is not None else ev.value, tol)


def rank_sequence(x: Matrix, ev: Eigenvalue, kmax: int, tol: float = TOL_RANK) -> list[int]:
    """``[rank((X - lam I)**k) for k in 0..kmax]``."""
    n = x.n
    if ev.exact is not None:
        shifted = _shift(x, ev.exact)
        out, power = [n], Matrix.identity(n)
        for _ in range(kmax):
            power = power @ shifted
            out.append(rank(power))
        return out
    shifted = x.to_numpy().astype(complex) - ev.value * np.eye(n)
    out, power = [n], np.eye(n, dtype=complex)
    for _ in range(kmax):
        power = power @ shifted
        # Numerical rank can never drop below n - multiplicity.
        out.append(max(numeric_rank(power, tol), n - ev.multiplicity))
    return out


def jordan_block_sizes(x: Matrix, ev: Eigenvalue, tol: float = TOL_RANK) -> list[int]:
    """Sizes of the Jordan blocks for ``ev``, largest first."""
    r = rank_sequence(x, ev, ev.multiplicity + 1, tol)
    sizes = []
    for k in range(1, ev.multiplicity + 1):
        at_least_k = r[k - 1] - r[k]
        at_least_k1 = r[k] - r[k + 1]
        sizes.extend([k] * (at_least_k - at_least_k1))
    return sorted(sizes, reverse=True)


def jordan_chains(x: Matrix, ev: Eigenvalue, tol: float = TOL_RANK) -> list[list]:
    """One chain ``[x_1, ..., x_tau]`` per basis vector of the generalized eigenspace.

    ``x_tau`` is the basis vector and ``x_{k-1} = (X - lam I) x_k``, so ``x_1``
    is an eigenvector. Exact eigenvalues give exact chains (tuples of
    scalars); otherwise the chains are numpy vectors.
    """
    space = eigenspace_of(x, ev, tol)
    chains = []
    if ev.exact is not None:
        shifted = _shift(x, ev.exact)
        for v in space.exact_basis:
            chain = [tuple(v)]
            w = shifted.apply(v)
            while any(c != 0 for c in w):
                chain.append(w)
                w = shifted.apply(w)
            chains.append(chain[::-1])
        return chains
    shifted = x.to_numpy().astype(complex) - ev.value * np.eye(x.n)
    scale = max(1.0, np.linalg.norm(shifted, 2))
    for j in range(space.dim):
        v = space.basis[:, j]
        chain, w, k = [v], shifted @ v, 1
        while np.linalg.norm(w) > 1e-8 * scale ** k and k < ev.multiplicity:
            chain.append(w)
            w = shifted @ w
            k += 1
        chains.append(chain[::-1])
    return chains
