"""Command-line front end.

    cseq check   INPUT...   exit 0 if CS holds, 1 if it fails
    cseq analyze INPUT...   full diagnostic report
    cseq gen     FAMILY key=value...
    cseq batch   MANIFEST

INPUT is a pair file, two matrix files, or ``gen FAMILY key=value...``.
Exit codes: 0 holds / all pass, 1 CS fails (check) or a check failed
(analyze), 2 input error, 3 internal cross-method disagreement.
"""

from __future__ import annotations

import argparse
import json
import shlex
import sys
from pathlib import Path

from .analysis import (
    METHODS,
    AnalysisRequest,
    analyze_exit_code,
    analyze_report,
    check_exit_code,
    check_report,
    render_text,
)
from .exact.io import MatrixFormatError, dumps_pair, load_pair
from .families import DEFAULT_SEED, GeneratorSpec
from .spectral import TOL_CLUSTER, TOL_MATCH, TOL_RANK

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_DISAGREE = 0, 1, 2, 3


class InputError(Exception):
    pass


def resolve_pair(tokens: list[str], seed: int, base: Path | None = None):
    """Turn CLI/manifest tokens into ``(A, B, label)``."""
    if not tokens:
        raise InputError("no input given")
    if tokens[0] == "gen":
        try:
            spec = GeneratorSpec.parse(tokens[1:])
            a, b = spec.build(seed)
        except ValueError as exc:
            raise InputError(f"generator: {exc}") from None
        return a, b, f"gen {spec}"
    paths = [Path(t) if base is None or Path(t).is_absolute() else base / t for t in tokens]
    if len(paths) > 2:
        raise InputError(f"expected one pair file or two matrix files, got {len(paths)} paths")
    try:
        a, b = load_pair(*paths)
    except MatrixFormatError as exc:
        raise InputError(str(exc)) from None
    return a, b, " ".join(str(p) for p in paths)


def _methods(values: list[str] | None) -> tuple[str, ...]:
    if not values:
        return METHODS
    out: list[str] = []
    for v in values:
        out.extend(x.strip() for x in v.split(",") if x.strip())
    return tuple(dict.fromkeys(out))


def _request(args, spectral_default: bool) -> AnalysisRequest:
    spectral = args.spectral if args.spectral is not None else spectral_default
    return AnalysisRequest(
        methods=_methods(args.method),
        spectral=spectral,
        complementary_r=args.complementary_r,
        tol_cluster=args.tol_cluster,
        tol_rank=args.tol_rank,
        tol_match=args.tol_match,
        seed=args.seed,
    )


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _render(report, fmt: str) -> str:
    return json.dumps(report, indent=2) + "\n" if fmt == "json" else render_text(report)


def _run_single(args, full: bool) -> int:
    try:
        req = _request(args, spectral_default=full)
        a, b, label = resolve_pair(args.inputs, args.seed)
        if req.complementary_r is not None and not 0 <= req.complementary_r <= a.n:
            raise InputError(f"--complementary-r must lie in 0..{a.n}")
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if full:
        report = analyze_report(a, b, req, label)
        code = analyze_exit_code(report)
    else:
        report = check_report(a, b, req, label)
        if req.spectral or req.complementary_r is not None:
            full_report = analyze_report(a, b, req, label)
            for key in ("spectral", "complementary"):
                if key in full_report:
                    report[key] = full_report[key]
        code = check_exit_code(report)
    _emit(_render(report, args.format), args.output)
    return code


def cmd_check(args) -> int:
    return _run_single(args, full=False)


def cmd_analyze(args) -> int:
    return _run_single(args, full=True)


def cmd_gen(args) -> int:
    try:
        spec = GeneratorSpec.parse([args.family] + args.params)
        a, b = spec.build(args.seed)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    _emit(dumps_pair(a, b), args.output)
    return EXIT_OK


def read_manifest(path: Path) -> list[tuple[int, list[str]]]:
    """Non-blank, non-comment lines as ``(line_number, tokens)``."""
    entries = []
    for lineno, line in enumerate(path.read_text().splitlines(), 1):
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            entries.append((lineno, shlex.split(stripped)))
    return entries


def batch_rows(manifest: Path, req: AnalysisRequest) -> list[dict]:
    rows = []
    for lineno, tokens in read_manifest(manifest):
        row: dict = {"line": lineno, "source": " ".join(tokens)}
        try:
            a, b, label = resolve_pair(tokens, req.seed, manifest.parent)
        except InputError as exc:
            row.update(status="error", error=str(exc))
            rows.append(row)
            continue
        rep = analyze_report(a, b, req, label)
        sp = rep.get("spectral", {})
        row.update(
            status="ok",
            n=rep["n"],
            holds=rep["verdict"]["holds"],
            rank_of_M=rep["verdict"]["rank_of_M"],
            mult_zero_A=sp.get("mult_zero_A"),
            mult_zero_B=sp.get("mult_zero_B"),
            rank_A=sp.get("rank_A"),
            rank_B=sp.get("rank_B"),
            agreement=rep["agreement"],
            methods=rep["methods"],
            failed_checks=[k for k, v in rep["propositions"].items() if v == "fail"],
        )
        rows.append(row)
    return rows


def batch_summary(rows: list[dict]) -> dict:
    ok = [r for r in rows if r["status"] == "ok"]
    return {
        "schema": 1,
        "rows": rows,
        "total": len(rows),
        "holds": sum(1 for r in ok if r["holds"]),
        "fails": sum(1 for r in ok if not r["holds"]),
        "errors": len(rows) - len(ok),
        "disagreements": sum(1 for r in ok if not r["agreement"]),
    }


def render_batch_text(summary: dict) -> str:
    head = f"{'line':>4}  {'verdict':<7} {'rankM':>5} {'mA0':>4} {'mB0':>4} {'rkA':>4} {'rkB':>4}  {'agree':<5}  source"
    lines = [head, "-" * len(head)]
    for r in summary["rows"]:
        if r["status"] == "error":
            lines.append(f"{r['line']:>4}  ERROR   {r['error']}")
            continue
        lines.append(
            f"{r['line']:>4}  {'holds' if r['holds'] else 'fails':<7} {r['rank_of_M']:>5} "
            f"{_cell(r['mult_zero_A'])} {_cell(r['mult_zero_B'])} {_cell(r['rank_A'])} {_cell(r['rank_B'])}  "
            f"{'yes' if r['agreement'] else 'NO':<5}  {r['source']}"
            + (f"  [failed: {', '.join(r['failed_checks'])}]" if r["failed_checks"] else "")
        )
    lines.append(
        f"total {summary['total']}: {summary['holds']} holds, {summary['fails']} fails, "
        f"{summary['errors']} errors, {summary['disagreements']} disagreements"
    )
    return "\n".join(lines) + "\n"


def _cell(v) -> str:
    return f"{'-' if v is None else v:>4}"


def cmd_batch(args) -> int:
    manifest = Path(args.manifest)
    try:
        req = _request(args, spectral_default=True)
        rows = batch_rows(manifest, req)
    except OSError as exc:
        print(f"error: {manifest}: {exc.strerror}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    summary = batch_summary(rows)
    text = json.dumps(summary, indent=2) + "\n" if args.format == "json" else render_batch_text(summary)
    _emit(text, args.output)
    return EXIT_DISAGREE if summary["disagreements"] else EXIT_OK


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--method", action="append", metavar="M[,M...]",
                   help=f"decision methods among {', '.join(METHODS)} (default: all)")
    p.add_argument("--spectral", action=argparse.BooleanOptionalAction, default=None,
                   help="include spectral diagnostics (default: on for analyze/batch, off for check)")
    p.add_argument("--complementary-r", type=int, default=None, metavar="R",
                   help="also test r-complementarity for this r")
    p.add_argument("--tol-cluster", type=float, default=TOL_CLUSTER)
    p.add_argument("--tol-rank", type=float, default=TOL_RANK)
    p.add_argument("--tol-match", type=float, default=TOL_MATCH)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--output", "-o", default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cseq", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    for name, func, help_ in (
        ("check", cmd_check, "decide the CS property for a pair"),
        ("analyze", cmd_analyze, "full spectral and structural report"),
    ):
        p = sub.add_parser(name, help=help_)
        p.add_argument("inputs", nargs="+", help="pair file, two matrix files, or: gen FAMILY key=value...")
        _add_common(p)
        p.set_defaults(func=func)

    p = sub.add_parser("gen", help="generate a pair file")
    p.add_argument("family", choices=GeneratorSpec.FAMILIES)
    p.add_argument("params", nargs="*", help="key=value parameters (gamma, n, k, seed, density)")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("batch", help="analyze every pair listed in a manifest")
    p.add_argument("manifest")
    _add_common(p)
    p.set_defaults(func=cmd_batch)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses 2 for usage errors already; keep 0 for --help.
        return int(exc.code or 0)
    print(f"seed: {args.seed}", file=sys.stderr)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
