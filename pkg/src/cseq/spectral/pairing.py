"""Eigenvalue pairing: ``spec(sA) + spec(tB) == spec(sA + tB) + {0}*n`` as multisets."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np
from scipy.optimize import linear_sum_assignment

from ..exact import Matrix, as_scalar
from ..exact.scalar import to_complex
from .roots import TOL_CLUSTER, Spectrum, spectrum

TOL_MATCH = 1e-7
SAMPLE_SEED = 0
_COLLISION_TOL = 1e-6


def _draw(rng: random.Random) -> float:
    # Dyadic values m/16 in [0.5, 2]: exactly representable as floats and as Fractions.
    return rng.choice((-1, 1)) * rng.randint(8, 32) / 16


def sample_collisions(s, t, lam_a: Sequence[complex], mu_b: Sequence[complex]) -> list[tuple[complex, complex]]:
    """Pairs ``(lam, mu)`` of nonzero eigenvalues with ``1 - s*lam == 1 - t*mu`` (numerically)."""
    s, t = float(s), float(t)
    return [
        (lam, mu)
        for lam in lam_a
        for mu in mu_b
        if abs(s * lam - t * mu) <= _COLLISION_TOL * max(1.0, abs(s * lam))
    ]


def default_samples(
    count: int = 5,
    seed: int = SAMPLE_SEED,
    lam_a: Sequence[complex] = (),
    mu_b: Sequence[complex] = (),
    tries: int = 200,
) -> list[tuple[float, float]]:
    """Deterministic ``(s, t)`` samples with ``|s|, |t|`` in ``[0.5, 2]``.

    Draws that make ``1 - s*lam`` coincide with ``1 - t*mu`` for the given
    nonzero eigenvalues are redrawn; after ``tries`` attempts the last draw is
    kept and the caller can detect it with :func:`sample_collisions`.
    """
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        for _ in range(tries):
            s, t = _draw(rng), _draw(rng)
            if not sample_collisions(s, t, lam_a, mu_b):
                break
        out.append((s, t))
    return out


def match_multisets(x: Sequence[complex], y: Sequence[complex]) -> float:
    """Largest distance in a minimum-cost perfect matching between ``x`` and ``y``."""
    if len(x) != len(y):
        return float("inf")
    if not x:
        return 0.0
    cost = np.abs(np.subtract.outer(np.asarray(x, dtype=complex), np.asarray(y, dtype=complex)))
    rows, cols = linear_sum_assignment(cost)
    return float(cost[rows, cols].max())


@dataclass
class PairingResult:
    ok: bool
    max_distance: float
    first_failure: tuple | None = None
    distances: list[float] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def pairing_check(
    a: Matrix,
    b: Matrix,
    samples: Sequence[tuple] | None = None,
    tol: float = TOL_MATCH,
    tol_cluster: float = TOL_CLUSTER,
    spec_a: Spectrum | None = None,
    spec_b: Spectrum | None = None,
) -> PairingResult:
    """Compare ``spec(sA) u spec(tB)`` with ``spec(sA+tB) u {0}^n`` at each sample.

    Samples are converted to exact rationals so that ``sA + tB`` has an exact
    characteristic polynomial; only root extraction is floating.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if samples is None:
        samples = default_samples()
    if not samples:
        raise ValueError("at least one sample is required")
    n = a.n
    spec_a = spec_a or spectrum(a, tol_cluster)
    spec_b = spec_b or spectrum(b, tol_cluster)
    va, vb = np.array(spec_a.values()), np.array(spec_b.values())
    distances, first_failure = [], None
    for s, t in samples:
        if not (np.isfinite(float(s)) and np.isfinite(float(t))):
            raise ValueError(f"non-finite sample {(s, t)}")
        se = Fraction(s) if isinstance(s, float) else as_scalar(s)
        te = Fraction(t) if isinstance(t, float) else as_scalar(t)
        left = list(to_complex(se) * va) + list(to_complex(te) * vb)
        right = spectrum(a.scale(se) + b.scale(te), tol_cluster).values() + [0j] * n
        d = match_multisets(left, right)
        distances.append(d)
        if d > tol and first_failure is None:
            first_failure = (s, t)
    return PairingResult(first_failure is None, max(distances), first_failure, distances)
