"""Acceptance criteria, one check per criterion.

Each check returns ``(ok, detail)``. Under pytest every check is a test and a
PASS/FAIL line per criterion is printed in the terminal summary; run this file
directly (``python tests/test_acceptance.py``) to get just those lines.
"""

from __future__ import annotations

import random
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cseq.bivar import coeff_grid_interp, coeff_grid_minors
from cseq.complementary import check_prop4, is_r_complementary, structured_matrix
from cseq.criterion import cs_direct, cs_identity_check, cs_rank_test
from cseq.exact import Matrix, det, rank
from cseq.families import (
    block_abzero,
    example1,
    jordan_matrix,
    normal_commuting,
    prop3_pair,
    prop5_pair,
    random_matrix,
    random_nonsingular,
    random_symmetric,
    triangular_cs,
)
from cseq.flags import Flag
from cseq.spectral import (
    check_prop2,
    check_prop3,
    default_samples,
    is_semisimple_zero,
    mult_zero,
    nu_and_F,
    pairing_check,
)
from cseq.spectral.props import prop5_hypotheses
from cseq.spectral.roots import spectrum

# Pinned tolerances and limits.
TOL_MATCH = 1e-7
TOL_RANK = 1e-9
TOL_CLUSTER = 1e-8
PAIRING_SAMPLES = 5
MODEL_SAMPLES = 3
LIMIT_EXAMPLE_S = 1.0
LIMIT_ORACLE_S = 60.0
LIMIT_STRUCTURAL_S = 30.0
LIMIT_PAIRING_S = 10.0
MIN_ORACLE_PAIRS = 200
MIN_NECESSARY = 50
MIN_THREE_WAY = 50
MIN_COMPLEMENTARY = 20
MIN_SYMMETRIC = 30
MIN_MODEL_PAIRS = 10
SEED = 20240601

RESULTS: dict[str, tuple[bool, str]] = {}


def _timed(fn):
    start = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - start


def _cs_pairs(rng: random.Random, count: int):
    """Constructed CS pairs: conjugated block AB=O pairs and triangular/nilpotent pairs, sizes 2..5."""
    pairs = []
    for i in range(count):
        n = 2 + i % 4
        if i % 2 == 0:
            pairs.append(block_abzero(n, rng.randint(0, n), rng, conjugated=True))
        else:
            pairs.append(triangular_cs(n, rng))
    return pairs


# --- criteria ---------------------------------------------------------------------------


def crit_gamma_family():
    def run():
        problems = []
        v = cs_direct(*example1(1))
        if not (v.holds and v.rank_of_M == 1):
            problems.append(f"gamma=1: holds={v.holds} rank={v.rank_of_M}")
        for g in (2, Fraction(1, 2), -1, Fraction(3, 7)):
            v = cs_direct(*example1(g))
            if v.holds:
                problems.append(f"gamma={g} reported holding")
        g = 2
        grid = coeff_grid_interp(*example1(g))
        expected = {(0, 0): 1, (1, 0): 2 * (g - 1), (2, 0): (g - 1) ** 2, (0, 2): -1, (1, 2): 1 - g}
        for p in range(4):
            for q in range(4):
                if grid[p, q] != expected.get((p, q), 0):
                    problems.append(f"gamma=2 m_{p}{q} = {grid[p, q]}")
        return problems

    problems, secs = _timed(run)
    ok = not problems and secs < LIMIT_EXAMPLE_S
    return ok, f"{secs:.3f}s" + (f"; {problems}" if problems else "")


def crit_complementary_examples():
    def run():
        jordan = Matrix([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
        b = Matrix([[1, 0, 0], [0, 0, 1], [0, 0, 0]])
        a2 = Matrix([[0, 0, 0], [0, 1, 1], [0, 0, 1]])
        first = [is_r_complementary(jordan, b, r).is_complementary for r in (1, 2)]
        r1 = is_r_complementary(a2, b, 1)
        r2 = is_r_complementary(a2, b, 2)
        witnesses = [w.indices for w in r1.witnesses]
        det_n = det(structured_matrix(a2, b, (1,)))
        return (
            first == [False, False]
            and r1.is_complementary
            and witnesses == [(1,)]
            and det_n == 1
            and not r2.is_complementary
        ), f"first pair r=1,2: {first}; second pair witnesses {witnesses}, det N = {det_n}, r=2: {r2.is_complementary}"

    (ok, detail), secs = _timed(run)
    return ok and secs < LIMIT_EXAMPLE_S, f"{detail}; {secs:.3f}s"


_ORACLE_CACHE: dict = {}


def _oracle_pairs():
    if "pairs" not in _ORACLE_CACHE:
        rng = random.Random(SEED)
        pairs = []
        for i in range(MIN_ORACLE_PAIRS):
            n = 2 + i % 4
            density = (1.0, 0.6, 0.3)[i % 3]
            pairs.append((random_matrix(n, rng, density=density), random_matrix(n, rng, density=density)))
        _ORACLE_CACHE["pairs"] = pairs + _cs_pairs(rng, 40)
    return _ORACLE_CACHE["pairs"]


def crit_oracle_equivalence():
    def run():
        mismatched_grids = disagreements = holds = 0
        pairs = _oracle_pairs()
        for a, b in pairs:
            gi, gm = coeff_grid_interp(a, b), coeff_grid_minors(a, b)
            if gi != gm:
                mismatched_grids += 1
            verdicts = {cs_rank_test(gi).holds, cs_direct(a, b, gi).holds, not cs_identity_check(a, b)}
            if len(verdicts) != 1:
                disagreements += 1
            holds += cs_direct(a, b, gi).holds
        return len(pairs), mismatched_grids, disagreements, holds

    (count, bad_grids, disagree, holds), secs = _timed(run)
    ok = count >= MIN_ORACLE_PAIRS and bad_grids == 0 and disagree == 0 and secs < LIMIT_ORACLE_S
    return ok, f"{count} pairs ({holds} CS), grid mismatches {bad_grids}, verdict disagreements {disagree}, {secs:.1f}s"


def crit_traces():
    bad = 0
    pairs = _oracle_pairs()
    for a, b in pairs:
        for g in (coeff_grid_interp(a, b), coeff_grid_minors(a, b)):
            if g[0, 1] != -b.trace() or g[1, 0] != -a.trace():
                bad += 1
    return bad == 0, f"{len(pairs)} pairs, {bad} violations"


def crit_necessary_conditions():
    def run():
        rng = random.Random(SEED + 2)
        pairs = _cs_pairs(rng, MIN_NECESSARY)
        # triangular pairs with nonsingular A exercise II directly
        while len(pairs) < MIN_NECESSARY + 12:
            a, b = triangular_cs(2 + len(pairs) % 4, rng)
            if det(a) != 0:
                pairs.append((a, b))
        counts = {"I": 0, "II": 0, "III": 0}
        failures = []
        not_cs = 0
        for a, b in pairs:
            v = cs_direct(a, b)
            if not v.holds:
                not_cs += 1
                continue
            flags = check_prop2(a, b, v)
            if flags["I"] is not Flag.PASS:
                failures.append("I")
            if det(a) != 0 and flags["II"] is not Flag.PASS:
                failures.append("II")
            if is_semisimple_zero(a) and is_semisimple_zero(b) and flags["III"] is not Flag.PASS:
                failures.append("III")
            for key, flag in flags.items():
                counts[key] += flag is not Flag.NA
        return len(pairs), not_cs, counts, failures

    (total, not_cs, counts, failures), secs = _timed(run)
    ok = (
        total - not_cs >= MIN_NECESSARY
        and not_cs == 0
        and not failures
        and counts["II"] > 0
        and counts["III"] > 0
        and secs < LIMIT_STRUCTURAL_S
    )
    return ok, f"{total} CS pairs, applicable I/II/III = {counts['I']}/{counts['II']}/{counts['III']}, failures {failures}, {secs:.1f}s"


def crit_three_conditions():
    def run():
        rng = random.Random(SEED + 3)
        applicable = disagree = 0
        outcomes = set()
        for i in range(MIN_THREE_WAY):
            a, b = prop3_pair(2 + i % 4, rng, ab_zero=i % 2 == 0)
            rep = check_prop3(a, b)
            if rep.status is Flag.NA:
                continue
            applicable += 1
            outcomes.add(rep.cs_holds)
            if not rep.cs_holds == rep.subspace_sum == rep.ab_zero:
                disagree += 1
        return applicable, disagree, outcomes

    (applicable, disagree, outcomes), secs = _timed(run)
    ok = applicable >= MIN_THREE_WAY and disagree == 0 and outcomes == {True, False} and secs < LIMIT_STRUCTURAL_S
    return ok, f"{applicable} pairs with hypotheses met, outcomes {sorted(outcomes)}, disagreements {disagree}, {secs:.1f}s"


def crit_complementary_multiplicity():
    rng = random.Random(SEED + 4)
    met = bad = 0
    for i in range(MIN_COMPLEMENTARY):
        n = 2 + i % 4
        k = 1 + i % (n - 1)
        a, b = block_abzero(n, k, rng)
        rep, _ = check_prop4(a, b)
        if rep.status is Flag.NA:
            continue
        met += 1
        if rep.theta == 0 or mult_zero(a) + mult_zero(b) != n:
            bad += 1
    return met >= MIN_COMPLEMENTARY and bad == 0, f"{met} pairs with hypotheses met (theta != 0), {bad} violations"


def crit_symmetric():
    rng = random.Random(SEED + 5)
    orth_ok = orth_total = gen_ok = gen_total = 0
    for i in range(MIN_SYMMETRIC):
        n = 2 + i % 3
        a, b = normal_commuting(n, rng, disjoint=True)
        assert a == a.T and b == b.T and (a @ b).is_zero()
        orth_total += 1
        orth_ok += cs_direct(a, b).holds
    while gen_total < MIN_SYMMETRIC:
        n = 2 + gen_total % 3
        a, b = random_symmetric(n, rng), random_symmetric(n, rng)
        if (a @ b).is_zero():
            continue
        gen_total += 1
        gen_ok += not cs_direct(a, b).holds
    ok = orth_ok == orth_total >= MIN_SYMMETRIC and gen_ok == gen_total >= MIN_SYMMETRIC
    return ok, f"AB=O holds {orth_ok}/{orth_total}; AB!=O fails {gen_ok}/{gen_total}"


def crit_pairing():
    def run():
        rng = random.Random(SEED + 6)
        pairs = _cs_pairs(rng, 40)
        for n in (2, 3):
            pairs += [normal_commuting(n, rng, disjoint=True) for _ in range(5)]
        passed = worst = 0
        for a, b in pairs:
            assert cs_direct(a, b).holds
            spec_a, spec_b = spectrum(a, TOL_CLUSTER), spectrum(b, TOL_CLUSTER)
            samples = default_samples(
                PAIRING_SAMPLES, seed=0,
                lam_a=[e.value for e in spec_a.nonzero()], mu_b=[e.value for e in spec_b.nonzero()],
            )
            res = pairing_check(a, b, samples, TOL_MATCH, TOL_CLUSTER, spec_a, spec_b)
            passed += res.ok
            worst = max(worst, res.max_distance)
        bad = pairing_check(*example1(2), default_samples(PAIRING_SAMPLES, seed=0), TOL_MATCH)
        return len(pairs), passed, worst, bad

    (total, passed, worst, bad), secs = _timed(run)
    ok = passed == total and not bad.ok and bad.first_failure is not None and secs < LIMIT_PAIRING_S
    return ok, (
        f"CS pairs passing {passed}/{total} (max distance {worst:.2e}); "
        f"gamma=2 fails at {bad.first_failure}; {secs:.2f}s"
    )


def _model_matrix_pairs():
    rng = random.Random(SEED + 7)
    golden = Matrix([[1, 1], [1, 0]])
    rotation = Matrix([[0, -1], [1, 0]])
    cores = [
        (jordan_matrix([(2, 2)]), jordan_matrix([(-1, 1)]), 1),
        (jordan_matrix([(3, 3)]), jordan_matrix([(Fraction(1, 2), 2)]), 0),
        (jordan_matrix([(2, 2), (-1, 1)]), jordan_matrix([(3, 3)]), 2),
        (golden, rotation, 1),
        (rotation, golden, 0),
        (golden, jordan_matrix([(1, 2)]), 2),
        (jordan_matrix([("i", 2)]), jordan_matrix([(5, 1)]), 1),
        (random_nonsingular(2, rng), random_nonsingular(3, rng), 1),
        (random_nonsingular(3, rng), random_nonsingular(1, rng), 0),
        (jordan_matrix([(1, 1), (1, 1)]), golden, 1),
        (jordan_matrix([(-2, 2)]), rotation, 0),
        (Matrix([[2, 1], [1, 1]]), jordan_matrix([(-3, 2)]), 1),
    ]
    return [prop5_pair(ca, cb, nu, rng if i % 2 else None) for i, (ca, cb, nu) in enumerate(cores)]


def crit_model_matrix():
    def run():
        checked = ok_count = 0
        details = []
        for a, b in _model_matrix_pairs():
            _, side = prop5_hypotheses(a, b, spectrum(a, TOL_CLUSTER), spectrum(b, TOL_CLUSTER), TOL_RANK)
            if side is None:
                details.append("hypotheses not met")
                continue
            checked += 1
            nu = a.n - (rank(a) + rank(b))
            good = True
            for s, t in default_samples(MODEL_SAMPLES, seed=0):
                r = nu_and_F(a, b, s, t, TOL_RANK, TOL_CLUSTER)
                good = good and r.nu == nu and r.mult_one_in_F == nu and bool(r.similar)
            ok_count += good
        return checked, ok_count, details

    (checked, ok_count, details), secs = _timed(run)
    ok = checked >= MIN_MODEL_PAIRS and ok_count == checked
    return ok, f"{ok_count}/{checked} pairs pass at {MODEL_SAMPLES} samples{'; ' + ', '.join(details) if details else ''}; {secs:.2f}s"


CRITERIA = [
    ("gamma family: CS exactly at gamma = 1, grid entries", crit_gamma_family),
    ("row-substitution examples: witnesses and determinants", crit_complementary_examples),
    ("interpolation grid == minor grid, three methods agree", crit_oracle_equivalence),
    ("m_01 = -tr(B) and m_10 = -tr(A)", crit_traces),
    ("CS pairs: zero multiplicity, nilpotency and rank bounds", crit_necessary_conditions),
    ("CS, full zero-eigenspace sum and AB = O agree", crit_three_conditions),
    ("complementary pairs: zero multiplicities sum to n", crit_complementary_multiplicity),
    ("Symmetric pairs: CS iff AB = O", crit_symmetric),
    ("CS pairs pass eigenvalue pairing at samples", crit_pairing),
    ("nu formula and model matrix F similarity", crit_model_matrix),
]


@pytest.mark.parametrize("name, check", CRITERIA, ids=[c[0] for c in CRITERIA])
def test_criterion(name, check):
    ok, detail = check()
    RESULTS[name] = (ok, detail)
    assert ok, detail


def report_lines() -> list[str]:
    return [f"{'PASS' if ok else 'FAIL'}: {name} -- {detail}" for name, (ok, detail) in RESULTS.items()]


if __name__ == "__main__":
    for name, check in CRITERIA:
        RESULTS[name] = check()
    print("\n".join(report_lines()))
    sys.exit(0 if all(ok for ok, _ in RESULTS.values()) else 1)
