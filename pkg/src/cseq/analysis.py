"""Report assembly shared by the CLI subcommands.

Reports are plain dicts (schema version 1) so the JSON and text renderings
carry the same content. Exact scalars are serialized in the matrix file
scalar syntax.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bivar import coeff_grid_interp, coeff_grid_minors
from .complementary import check_cor1, check_prop4, is_r_complementary
from .criterion import CsVerdict, cs_direct, cs_identity_check, cs_rank_test
from .exact import Matrix, format_scalar
from .families import DEFAULT_SEED
from .flags import Flag
from .spectral import TOL_CLUSTER, TOL_MATCH, TOL_RANK, spectral_report

SCHEMA_VERSION = 1
METHODS = ("rank", "direct", "identities")
MAX_IDENTITY_N = 8


@dataclass
class AnalysisRequest:
    methods: tuple[str, ...] = METHODS
    spectral: bool = True
    complementary_r: int | None = None
    tol_cluster: float = TOL_CLUSTER
    tol_rank: float = TOL_RANK
    tol_match: float = TOL_MATCH
    seed: int = DEFAULT_SEED
    notices: list[str] = field(default_factory=list)

    def __post_init__(self):
        if not self.methods:
            raise ValueError("at least one method must be selected")
        bad = set(self.methods) - set(METHODS)
        if bad:
            raise ValueError(f"unknown method(s): {', '.join(sorted(bad))}")
        for name in ("tol_cluster", "tol_rank", "tol_match"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")


def _vec(v) -> list[str] | None:
    return None if v is None else [format_scalar(x) for x in v]


def _verdict_dict(v: CsVerdict) -> dict:
    w = v.witness
    return {
        "holds": v.holds,
        "rank_of_M": v.rank_of_M,
        "factor_k": _vec(v.factor_k),
        "factor_l": _vec(v.factor_l),
        "witness": None if w is None else {"p": w.p, "q": w.q, "m_pq": format_scalar(w.lhs), "a_p*b_q": format_scalar(w.rhs)},
    }


def check_report(a: Matrix, b: Matrix, req: AnalysisRequest, source: str = "", grid=None) -> dict:
    """Decide CS with every requested method and record whether they agree."""
    n = a.n
    if grid is None:
        grid = coeff_grid_interp(a, b)
    notices = list(req.notices)
    decisions: dict[str, bool | str] = {}
    verdict = cs_rank_test(grid)
    if "rank" in req.methods:
        decisions["rank"] = verdict.holds
    if "direct" in req.methods:
        direct = cs_direct(a, b, grid)
        decisions["direct"] = direct.holds
        if "rank" not in req.methods:
            verdict = direct
    grids_agree = None
    if "identities" in req.methods:
        if n <= MAX_IDENTITY_N:
            violations = cs_identity_check(a, b)
            decisions["identities"] = not violations
            grids_agree = coeff_grid_minors(a, b) == grid
        else:
            decisions["identities"] = "skipped"
            notices.append(f"identity check skipped for n={n} > {MAX_IDENTITY_N}")
    booleans = [d for d in decisions.values() if isinstance(d, bool)]
    agreement = all(d == verdict.holds for d in booleans) and grids_agree is not False
    return {
        "schema": SCHEMA_VERSION,
        "source": source,
        "n": n,
        "seed": req.seed,
        "verdict": _verdict_dict(verdict),
        "methods": decisions,
        "grids_agree": grids_agree,
        "agreement": agreement,
        "grid": [[format_scalar(x) for x in row] for row in grid.coeffs],
        "notices": notices,
    }


def _remark3(grid_rows, verdict: CsVerdict) -> Flag:
    """Under CS, ``M = k l^T`` so ``M M == (l . k) M``."""
    if not verdict.holds:
        return Flag.NA
    m = Matrix(grid_rows)
    lk = sum((x * y for x, y in zip(verdict.factor_l, verdict.factor_k)), 0)
    return Flag.of(m @ m == m.scale(lk))


def _complementary_dict(rep) -> dict:
    return {
        "r": rep.r,
        "is_complementary": rep.is_complementary,
        "witnesses": [list(w.indices) for w in rep.witnesses],
        "theta": format_scalar(rep.theta),
    }


def _prop4_dict(rep) -> dict:
    return {
        "status": str(rep.status),
        "unmet": rep.unmet,
        "r": rep.r,
        "theta": format_scalar(rep.theta),
        "mult_zero_A": rep.mult_zero_A,
        "mult_zero_B": rep.mult_zero_B,
        "witnesses": [list(w.indices) for w in rep.complementary.witnesses],
    }


def _complex_str(z: complex) -> str:
    return f"{z.real:.12g}{z.imag:+.12g}i" if z.imag else f"{z.real:.12g}"


def _spectrum_dict(spec) -> list[dict]:
    return [
        {
            "value": format_scalar(ev.exact) if ev.exact is not None else _complex_str(ev.value),
            "exact": ev.exact is not None,
            "multiplicity": ev.multiplicity,
        }
        for ev in spec.eigenvalues
    ]


def analyze_report(a: Matrix, b: Matrix, req: AnalysisRequest, source: str = "") -> dict:
    """Full report: verdict, spectral diagnostics, complementarity and every proposition flag."""
    grid = coeff_grid_interp(a, b)
    report = check_report(a, b, req, source, grid)
    verdict = cs_direct(a, b, grid)
    props: dict[str, Flag] = {}

    p4, mirror = check_prop4(a, b, verdict)
    props["prop4"] = p4.status
    props["remark1"] = mirror.status
    for key, flag in check_cor1(a, b, p4).items():
        props[f"cor1_{key}"] = flag
    props["remark3"] = _remark3(grid.coeffs, verdict)
    report["prop4"] = _prop4_dict(p4)
    report["remark1"] = _prop4_dict(mirror)

    if req.complementary_r is not None:
        report["complementary"] = _complementary_dict(is_r_complementary(a, b, req.complementary_r))

    if req.spectral:
        sr = spectral_report(
            a, b, verdict,
            tol_cluster=req.tol_cluster,
            tol_rank=req.tol_rank,
            tol_match=req.tol_match,
            seed=req.seed,
        )
        props.update(sr.prop_flags)
        report["spectral"] = {
            "mult_zero_A": sr.mult_zero_A,
            "mult_zero_B": sr.mult_zero_B,
            "semisimple_zero_A": sr.semisimple_zero_A,
            "semisimple_zero_B": sr.semisimple_zero_B,
            "rank_A": sr.rank_A,
            "rank_B": sr.rank_B,
            "nu": sr.nu,
            "pairing_ok": sr.pairing_ok,
            "pairing_max_distance": sr.pairing.max_distance,
            "pairing_first_failure": list(sr.pairing.first_failure) if sr.pairing.first_failure else None,
            "spectrum_A": _spectrum_dict(sr.spectrum_A),
            "spectrum_B": _spectrum_dict(sr.spectrum_B),
            "prop3": None if sr.prop3 is None else {
                "status": str(sr.prop3.status),
                "hypotheses": sr.prop3.hypotheses,
                "cs_holds": sr.prop3.cs_holds,
                "subspace_sum_full": sr.prop3.subspace_sum,
                "ab_zero": sr.prop3.ab_zero,
            },
            "prop5": None if sr.prop5 is None else {
                "status": str(sr.prop5.status),
                "hypotheses": sr.prop5.hypotheses,
                "cs_holds": sr.prop5.cs_holds,
                "derived_containment": sr.prop5.derived_containment,
                "exact_cross_check": sr.prop5.exact_cross_check,
                "chain_action": sr.prop5.chain_action,
                "collisions": [[_complex_str(x), _complex_str(y)] for x, y in sr.prop5.collisions],
            },
            "remark2": [
                {"nu": r.nu, "mult_one_in_F": r.mult_one_in_F, "similar": r.similar} for r in sr.remark2
            ],
            "samples": [list(s) for s in sr.samples],
        }
    report["propositions"] = {k: str(v) for k, v in props.items()}
    report["all_pass"] = not any(v is Flag.FAIL for v in props.values())
    return report


def check_exit_code(report: dict) -> int:
    if not report["agreement"]:
        return 3
    return 0 if report["verdict"]["holds"] else 1


def analyze_exit_code(report: dict) -> int:
    if not report["agreement"]:
        return 3
    return 0 if report["all_pass"] else 1


def render_text(report: dict) -> str:
    """Human-readable rendering of a check or analyze report."""
    v = report["verdict"]
    lines = []
    if report.get("source"):
        lines.append(f"source: {report['source']}")
    lines.append(f"n = {report['n']}   seed = {report['seed']}")
    lines.append(f"CS property: {'HOLDS' if v['holds'] else 'FAILS'}   rank(M) = {v['rank_of_M']}")
    if v["holds"]:
        lines.append(f"  k = ({', '.join(v['factor_k'])})")
        lines.append(f"  l = ({', '.join(v['factor_l'])})")
    elif v["witness"]:
        w = v["witness"]
        lines.append(f"  witness: m_{w['p']}{w['q']} = {w['m_pq']} but a_p*b_q = {w['a_p*b_q']}  (p={w['p']}, q={w['q']})")
    methods = ", ".join(f"{k}={'holds' if d is True else 'fails' if d is False else d}" for k, d in report["methods"].items())
    lines.append(f"methods: {methods}")
    if report["grids_agree"] is not None:
        lines.append(f"interpolation grid == minor-sum grid: {report['grids_agree']}")
    lines.append(f"agreement: {'yes' if report['agreement'] else 'NO (internal disagreement)'}")
    lines.append("coefficient grid M (rows: powers of s, columns: powers of t):")
    width = max(len(x) for row in report["grid"] for x in row)
    for row in report["grid"]:
        lines.append("  [" + "  ".join(x.rjust(width) for x in row) + "]")
    for note in report["notices"]:
        lines.append(f"notice: {note}")
    sp = report.get("spectral")
    if sp:
        lines.append("spectral:")
        for key in ("mult_zero_A", "mult_zero_B", "semisimple_zero_A", "semisimple_zero_B",
                    "rank_A", "rank_B", "nu", "pairing_ok"):
            lines.append(f"  {key}: {sp[key]}")
        if sp["pairing_first_failure"]:
            lines.append(f"  pairing first failing sample: {tuple(sp['pairing_first_failure'])}")
    comp = report.get("complementary")
    if comp:
        lines.append(
            f"{comp['r']}-complementary: {comp['is_complementary']}   theta = {comp['theta']}   "
            f"witnesses = {comp['witnesses']}"
        )
    if "prop4" in report:
        p4 = report["prop4"]
        extra = f" (unmet: {'; '.join(p4['unmet'])})" if p4["unmet"] else ""
        lines.append(f"prop4: r = {p4['r']}, theta = {p4['theta']}{extra}")
    props = report.get("propositions")
    if props:
        lines.append("propositions:")
        for k, flag in props.items():
            lines.append(f"  {k}: {flag}")
    return "\n".join(lines) + "\n"
