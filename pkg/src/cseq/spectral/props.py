"""Conditional spectral checks tied to the CS property.

Each check evaluates its hypotheses first and reports ``Flag.NA`` when they
are not met; otherwise it evaluates the conclusion independently.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from ..criterion import CsVerdict, cs_direct
from ..exact import Matrix, as_scalar, det, rank, span_rank
from ..exact.scalar import to_complex
from ..flags import Flag
from .basic import is_nilpotent, is_semisimple_zero, mult_zero, zero_eigenspace
from .eigenspace import (
    TOL_RANK,
    contains,
    eigenspace_of,
    jordan_block_sizes,
    jordan_chains,
    numeric_rank,
    orthonormal_columns,
)
from .pairing import SAMPLE_SEED, TOL_MATCH, PairingResult, default_samples, pairing_check, sample_collisions
from .roots import TOL_CLUSTER, Eigenvalue, Spectrum, spectrum


def _verdict(a: Matrix, b: Matrix, verdict: CsVerdict | None) -> CsVerdict:
    return verdict if verdict is not None else cs_direct(a, b)


def check_prop2(a: Matrix, b: Matrix, verdict: CsVerdict | None = None) -> dict[str, Flag]:
    """Necessary conditions for a CS pair.

    ``I``: m_A(0) + m_B(0) >= n. ``II``: A nonsingular implies B nilpotent.
    ``III``: semisimple zeros imply rank(A) + rank(B) <= n.
    """
    v = _verdict(a, b, verdict)
    if not v.holds:
        return {"I": Flag.NA, "II": Flag.NA, "III": Flag.NA}
    n = a.n
    flags = {"I": Flag.of(mult_zero(a) + mult_zero(b) >= n)}
    flags["II"] = Flag.of(is_nilpotent(b)) if det(a) != 0 else Flag.NA
    if is_semisimple_zero(a) and is_semisimple_zero(b):
        flags["III"] = Flag.of(rank(a) + rank(b) <= n)
    else:
        flags["III"] = Flag.NA
    return flags


def _invariant_under(b: Matrix, basis: list[tuple]) -> bool:
    """``B span(basis) ⊆ span(basis)``, exactly."""
    r = span_rank(basis)
    return all(span_rank(basis + [b.apply(v)]) == r for v in basis)


@dataclass
class Prop3Report:
    status: Flag
    hypotheses: dict[str, bool]
    cs_holds: bool | None = None
    subspace_sum: bool | None = None
    ab_zero: bool | None = None


def check_prop3(a: Matrix, b: Matrix, verdict: CsVerdict | None = None) -> Prop3Report:
    """Under semisimple zeros and ``B E_A(0) ⊆ E_A(0)``: CS, ``E_A(0)+E_B(0) = C^n`` and ``AB = O`` agree."""
    n = a.n
    ea = zero_eigenspace(a)
    hyp = {
        "semisimple_zero_A": is_semisimple_zero(a),
        "semisimple_zero_B": is_semisimple_zero(b),
        "B_preserves_E_A0": _invariant_under(b, ea),
    }
    if not all(hyp.values()):
        return Prop3Report(Flag.NA, hyp)
    cs = _verdict(a, b, verdict).holds
    full = span_rank(ea + zero_eigenspace(b)) == n
    ab = (a @ b).is_zero()
    return Prop3Report(Flag.of(cs == full == ab), hyp, cs, full, ab)


def _containment(x: Matrix, evs: Sequence[Eigenvalue], target: list[tuple], tol_rank: float) -> bool:
    """Every generalized eigenspace of ``x`` for ``evs`` lies in ``span(target)``."""
    n = x.n
    w = orthonormal_columns(target, n, tol_rank)
    for ev in evs:
        if ev.exact is not None:
            space = eigenspace_of(x, ev, tol_rank)
            r = span_rank(target)
            if any(span_rank(target + [v]) != r for v in space.exact_basis):
                return False
        else:
            space = eigenspace_of(x, ev, tol_rank)
            if any(not contains(w, space.basis[:, j], tol_rank) for j in range(space.dim)):
                return False
    return True


def _chain_action_ok(
    m_exact: Matrix,
    x: Matrix,
    ev: Eigenvalue,
    step,
    tol_rank: float,
    tol_match: float,
) -> bool:
    """``(I-sA-tB) x_k == (1 - step*lam) x_k - step x_{k-1}`` along every chain of ``ev``."""
    step = as_scalar(step)
    chains = jordan_chains(x, ev, tol_rank)
    if ev.exact is not None:
        diag = 1 - step * ev.exact
        for chain in chains:
            prev = None
            for vec in chain:
                lhs = m_exact.apply(vec)
                rhs = [diag * c for c in vec]
                if prev is not None:
                    rhs = [r - step * p for r, p in zip(rhs, prev)]
                if tuple(lhs) != tuple(rhs):
                    return False
                prev = vec
        return True
    m = m_exact.to_numpy().astype(complex)
    h = to_complex(step)
    diag = 1 - h * ev.value
    for chain in chains:
        prev = None
        for vec in chain:
            rhs = diag * vec - (h * prev if prev is not None else 0)
            if np.linalg.norm(m @ vec - rhs) > tol_match * max(1.0, np.linalg.norm(vec)):
                return False
            prev = vec
    return True


@dataclass
class Prop5Report:
    status: Flag
    hypotheses: dict[str, bool]
    cs_holds: bool | None = None
    derived_containment: bool | None = None
    chain_action: dict[str, bool] = field(default_factory=dict)
    collisions: list = field(default_factory=list)
    exact_cross_check: bool | None = None


def prop5_hypotheses(
    a: Matrix,
    b: Matrix,
    spec_a: Spectrum,
    spec_b: Spectrum,
    tol_rank: float = TOL_RANK,
) -> tuple[dict[str, bool], str | None]:
    """Hypothesis flags and which side (``"A"``/``"B"``) carries the containment."""
    n = a.n
    ea, eb = zero_eigenspace(a), zero_eigenspace(b)
    hyp = {
        "semisimple_zero_A": is_semisimple_zero(a),
        "semisimple_zero_B": is_semisimple_zero(b),
        "eigenspace_sum_full": span_rank(ea + eb) == n,
        "E_A(lam)_in_E_B(0)": _containment(a, spec_a.nonzero(), eb, tol_rank),
        "E_B(mu)_in_E_A(0)": _containment(b, spec_b.nonzero(), ea, tol_rank),
    }
    base = hyp["semisimple_zero_A"] and hyp["semisimple_zero_B"] and hyp["eigenspace_sum_full"]
    side = None
    if base:
        if hyp["E_A(lam)_in_E_B(0)"]:
            side = "A"
        elif hyp["E_B(mu)_in_E_A(0)"]:
            side = "B"
    return hyp, side


def check_prop5(
    a: Matrix,
    b: Matrix,
    samples: Sequence[tuple] | None = None,
    tol_rank: float = TOL_RANK,
    tol_match: float = TOL_MATCH,
    tol_cluster: float = TOL_CLUSTER,
    verdict: CsVerdict | None = None,
) -> Prop5Report:
    """CS and the bidiagonal action of ``I - sA - tB`` on Jordan chains of nonzero eigenvalues.

    The hypothesis needs the containment on one side; the other side is then
    verified as a consequence and reported in ``derived_containment``.
    """
    spec_a, spec_b = spectrum(a, tol_cluster), spectrum(b, tol_cluster)
    hyp, side = prop5_hypotheses(a, b, spec_a, spec_b, tol_rank)
    if side is None:
        return Prop5Report(Flag.NA, hyp)
    lam_a = [ev.value for ev in spec_a.nonzero()]
    mu_b = [ev.value for ev in spec_b.nonzero()]
    if samples is None:
        samples = default_samples(lam_a=lam_a, mu_b=mu_b)
    report = Prop5Report(Flag.NA, hyp)
    report.cs_holds = _verdict(a, b, verdict).holds
    report.derived_containment = hyp["E_B(mu)_in_E_A(0)"] if side == "A" else hyp["E_A(lam)_in_E_B(0)"]
    # Exact restatement of "all nonzero generalized eigenspaces of A lie in null(B)".
    n = a.n
    if side == "A":
        report.exact_cross_check = (b @ (a ** n)).is_zero()
    else:
        report.exact_cross_check = (a @ (b ** n)).is_zero()
    ok = report.cs_holds and report.derived_containment and report.exact_cross_check
    for s, t in samples:
        se, te = _exact(s), _exact(t)
        m = Matrix.identity(n) - a.scale(se) - b.scale(te)
        good = all(_chain_action_ok(m, a, ev, se, tol_rank, tol_match) for ev in spec_a.nonzero())
        good = good and all(_chain_action_ok(m, b, ev, te, tol_rank, tol_match) for ev in spec_b.nonzero())
        report.chain_action[f"({s}, {t})"] = good
        report.collisions.extend(sample_collisions(s, t, lam_a, mu_b))
        ok = ok and good
    report.status = Flag.of(bool(ok))
    return report


def _exact(x):
    return Fraction(x) if isinstance(x, float) else as_scalar(x)


def _bidiagonal(size: int, diag, off) -> list[list]:
    return [[diag if i == j else (off if j == i + 1 else 0) for j in range(size)] for i in range(size)]


@dataclass
class NuF:
    applicable: bool
    nu: int | None = None
    F: Matrix | np.ndarray | None = None
    similar: bool | None = None
    mult_one_in_F: int | None = None
    rank_sequences: dict = field(default_factory=dict)


def _block_diag_numeric(blocks: list[np.ndarray]) -> np.ndarray:
    n = sum(b.shape[0] for b in blocks)
    out = np.zeros((n, n), dtype=complex)
    k = 0
    for b in blocks:
        m = b.shape[0]
        out[k:k + m, k:k + m] = b
        k += m
    return out


def _distinct(values: Sequence[complex], tol: float) -> list[complex]:
    out: list[complex] = []
    for v in values:
        if all(abs(v - u) > tol * max(1.0, abs(u)) for u in out):
            out.append(v)
    return out


def nu_and_F(
    a: Matrix,
    b: Matrix,
    s,
    t,
    tol_rank: float = TOL_RANK,
    tol_cluster: float = TOL_CLUSTER,
) -> NuF:
    """Model matrix ``F = I_nu ⊕ (chain blocks of A) ⊕ (chain blocks of B)`` and its similarity to ``I - sA - tB``.

    Each Jordan block of size ``k`` of A at ``lam != 0`` contributes a ``k x k``
    upper bidiagonal block with ``1 - s*lam`` on the diagonal and ``-s`` above
    it; likewise for B with ``t``. Similarity is decided by comparing
    ``rank((X - phi I)^k)`` for every eigenvalue ``phi`` of ``F`` and
    ``k = 1..n``.
    """
    spec_a, spec_b = spectrum(a, tol_cluster), spectrum(b, tol_cluster)
    _, side = prop5_hypotheses(a, b, spec_a, spec_b, tol_rank)
    if side is None:
        return NuF(False)
    n = a.n
    se, te = _exact(s), _exact(t)
    nu = n - (rank(a) + rank(b))
    blocks = []
    for x, spec, step in ((a, spec_a, se), (b, spec_b, te)):
        for ev in spec.nonzero():
            lam = ev.exact if ev.exact is not None else ev.value
            for size in jordan_block_sizes(x, ev, tol_rank):
                blocks.append((size, lam, step))
    exact_model = not any(isinstance(lam, complex) for _, lam, _ in blocks)
    if exact_model:
        f = Matrix.identity(nu) if nu > 0 else None
        for size, lam, step in blocks:
            blk = Matrix(_bidiagonal(size, 1 - step * lam, -step))
            f = blk if f is None else f.direct_sum(blk)
        f_num = f.to_numpy().astype(complex)
        diag_f = [f[i, i] for i in range(f.shape[0])]
        mult_one = sum(1 for d in diag_f if d == 1)
    else:
        parts = [np.eye(nu, dtype=complex)] if nu > 0 else []
        for size, lam, step in blocks:
            h = to_complex(step)
            parts.append(np.array(_bidiagonal(size, 1 - h * complex(lam), -h), dtype=complex))
        f = f_num = _block_diag_numeric(parts)
        mult_one = int(np.sum(np.abs(np.diag(f_num) - 1) <= tol_cluster))
    if f_num.shape[0] != n:
        return NuF(True, nu, f, False, mult_one)
    m = (Matrix.identity(n) - a.scale(se) - b.scale(te)).to_numpy().astype(complex)
    similar = True
    seqs = {}
    for phi in _distinct(list(np.diag(f_num)), tol_cluster):
        pf, pm = np.eye(n, dtype=complex), np.eye(n, dtype=complex)
        rf, rm = [], []
        for _ in range(n):
            pf = pf @ (f_num - phi * np.eye(n))
            pm = pm @ (m - phi * np.eye(n))
            rf.append(numeric_rank(pf, tol_rank))
            rm.append(numeric_rank(pm, tol_rank))
        seqs[complex(phi)] = (rf, rm)
        similar = similar and rf == rm
    return NuF(True, nu, f, similar, mult_one, seqs)


@dataclass
class SpectralReport:
    mult_zero_A: int
    mult_zero_B: int
    semisimple_zero_A: bool
    semisimple_zero_B: bool
    rank_A: int
    rank_B: int
    nu: int | None
    pairing_ok: bool
    prop_flags: dict[str, Flag]
    pairing: PairingResult | None = None
    prop3: Prop3Report | None = None
    prop5: Prop5Report | None = None
    remark2: list[NuF] = field(default_factory=list)
    spectrum_A: Spectrum | None = None
    spectrum_B: Spectrum | None = None
    samples: list = field(default_factory=list)


def spectral_report(
    a: Matrix,
    b: Matrix,
    verdict: CsVerdict | None = None,
    samples: Sequence[tuple] | None = None,
    tol_cluster: float = TOL_CLUSTER,
    tol_rank: float = TOL_RANK,
    tol_match: float = TOL_MATCH,
    seed: int = SAMPLE_SEED,
) -> SpectralReport:
    """Run every spectral diagnostic and collect the proposition flags.

    Flags: ``prop1`` (pairing at samples agrees with the verdict), ``prop2_*``,
    ``prop3``, ``prop5`` and ``remark2`` (nu formula and F similarity).
    """
    v = _verdict(a, b, verdict)
    n = a.n
    spec_a, spec_b = spectrum(a, tol_cluster), spectrum(b, tol_cluster)
    lam_a = [ev.value for ev in spec_a.nonzero()]
    mu_b = [ev.value for ev in spec_b.nonzero()]
    if samples is None:
        samples = default_samples(seed=seed, lam_a=lam_a, mu_b=mu_b)
    pairing = pairing_check(a, b, samples, tol_match, tol_cluster, spec_a, spec_b)

    flags: dict[str, Flag] = {}
    if v.holds:
        flags["prop1"] = Flag.of(pairing.ok)
    else:
        # A failing sample confirms the verdict; passing samples are inconclusive.
        flags["prop1"] = Flag.PASS if not pairing.ok else Flag.NA
    for key, flag in check_prop2(a, b, v).items():
        flags[f"prop2_{key}"] = flag
    p3 = check_prop3(a, b, v)
    flags["prop3"] = p3.status
    p5 = check_prop5(a, b, samples, tol_rank, tol_match, tol_cluster, v)
    flags["prop5"] = p5.status

    nu = None
    remark2: list[NuF] = []
    if p5.status is not Flag.NA:
        nu = n - (rank(a) + rank(b))
        ok = nu >= 0
        for s, t in samples[:3]:
            r = nu_and_F(a, b, s, t, tol_rank, tol_cluster)
            remark2.append(r)
            ok = ok and bool(r.similar) and r.mult_one_in_F == nu
        flags["remark2"] = Flag.of(ok)
    else:
        flags["remark2"] = Flag.NA

    return SpectralReport(
        mult_zero_A=spec_a.mult_zero,
        mult_zero_B=spec_b.mult_zero,
        semisimple_zero_A=is_semisimple_zero(a),
        semisimple_zero_B=is_semisimple_zero(b),
        rank_A=rank(a),
        rank_B=rank(b),
        nu=nu,
        pairing_ok=pairing.ok,
        prop_flags=flags,
        pairing=pairing,
        prop3=p3,
        prop5=p5,
        remark2=remark2,
        spectrum_A=spec_a,
        spectrum_B=spec_b,
        samples=list(samples),
    )
