"""Eigenvalues from the exact characteristic polynomial.

The zero eigenvalue's multiplicity is read off the exact coefficients. The
remaining roots are found per squarefree factor (Yun), so repeated roots are
computed as simple roots of a lower-degree polynomial instead of as a fragile
numerical cluster. Roots that are exactly Gaussian rationals are recovered
and carried alongside the floating value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..exact import Matrix, Scalar, charpoly, make
from ..exact.poly import evaluate, squarefree_factors
from ..exact.scalar import to_complex

TOL_CLUSTER = 1e-8
_SNAP_DENOMINATOR = 10_000


@dataclass(frozen=True)
class Eigenvalue:
    value: complex
    multiplicity: int
    exact: Scalar | None = None

    @property
    def is_zero(self) -> bool:
        return self.exact is not None and self.exact == 0


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: tuple[Eigenvalue, ...]
    source_charpoly: tuple[Scalar, ...]
    mult_zero: int

    @property
    def n(self) -> int:
        return len(self.source_charpoly) - 1

    def nonzero(self) -> list[Eigenvalue]:
        return [ev for ev in self.eigenvalues if not ev.is_zero]

    def values(self) -> list[complex]:
        """Eigenvalues repeated by algebraic multiplicity."""
        out: list[complex] = []
        for ev in self.eigenvalues:
            out.extend([ev.value] * ev.multiplicity)
        return out


def trailing_zeros(coeffs_desc) -> int:
    """Number of vanishing low-order coefficients of a descending coefficient list."""
    k = 0
    for c in reversed(coeffs_desc):
        if c != 0:
            break
        k += 1
    return k


def _snap(factor, z: complex) -> Scalar | None:
    cand = make(
        Fraction(z.real).limit_denominator(_SNAP_DENOMINATOR),
        Fraction(z.imag).limit_denominator(_SNAP_DENOMINATOR),
    )
    return cand if evaluate(factor, cand) == 0 else None


def _factor_roots(factor) -> list[tuple[complex, Scalar | None]]:
    if len(factor) == 2:
        r = -factor[0] / factor[1]
        return [(to_complex(r), r)]
    desc = np.array([to_complex(c) for c in reversed(factor)])
    return [(complex(z), _snap(factor, complex(z))) for z in np.roots(desc)]


def spectrum_from_charpoly(coeffs_desc, tol_cluster: float = TOL_CLUSTER) -> Spectrum:
    coeffs_desc = tuple(coeffs_desc)
    m0 = trailing_zeros(coeffs_desc)
    asc = list(reversed(coeffs_desc))[m0:]
    raw: list[tuple[complex, int, Scalar | None]] = []
    for factor, k in squarefree_factors(asc):
        raw.extend((z, k, ex) for z, ex in _factor_roots(factor))

    clusters: list[list] = []
    for z, k, ex in raw:
        for c in clusters:
            if abs(z - c[0]) <= tol_cluster * max(1.0, abs(c[0])):
                c[1] += k
                c[2] = ex if c[2] is not None and ex == c[2] else None
                break
        else:
            clusters.append([z, k, ex])

    eigs = []
    if m0:
        eigs.append(Eigenvalue(0j, m0, Fraction(0)))
    for z, k, ex in sorted(clusters, key=lambda c: (c[0].real, c[0].imag)):
        eigs.append(Eigenvalue(to_complex(ex) if ex is not None else z, k, ex))
    return Spectrum(tuple(eigs), coeffs_desc, m0)


def spectrum(x: Matrix, tol_cluster: float = TOL_CLUSTER) -> Spectrum:
    return spectrum_from_charpoly(charpoly(x), tol_cluster)
