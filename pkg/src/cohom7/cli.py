"""Command-line interface: classify, case, rep, verify-concavity, catalog."""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path

from . import catalog as cat
from . import classifier as cl
from . import concavity
from .lie_core import UnsupportedRank, algebra
from .rep_expr import ParseError, evaluate, normalize

EXIT_OK = 0
EXIT_TOLERANCE = 1
EXIT_INCOMPLETE = 2
EXIT_GOLDEN = 3
EXIT_UNKNOWN_NAME = 4
EXIT_PARSE = 5
EXIT_NON_POSITIVE = 6

# fallback copy of data/table1.json
GOLDEN_TABLE1 = [
    {"n": 1, "G": "T^1×SU(3)", "K": "SU(2)"},
    {"n": 2, "G": "SU(2)^3", "K": "SU(2)"},
    {"n": 3, "G": "T^1×SU(2)^2", "K": "T^1"},
    {"n": 4, "G": "SU(2)^2", "K": "{1}"},
]

VARIANTS = {"h-eq-hprime": "H = H'", "h-ne-hprime": "H ≠ H'"}

# the invariant count the second fundamental form argument relies on
CLAIMED_INVARIANTS = {normalize("sym2(V0+V2)⊗V2"): 0}


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def load_golden(path: str | None) -> list[dict]:
    if path is not None:
        return json.loads(Path(path).read_text())
    try:
        return json.loads(resources.files("cohom7.data").joinpath("table1.json").read_text())
    except (FileNotFoundError, ModuleNotFoundError):
        return GOLDEN_TABLE1


def golden_matches(table: list[dict], golden: list[dict]) -> bool:
    keys = ("n", "G", "K")
    return [tuple(r[k] for k in keys) for r in table] == [tuple(r[k] for k in keys) for r in golden]


def table_markdown(table: list[dict]) -> str:
    lines = ["| | G | K° |", "|---|---|---|"]
    lines += [f"| ({r['n']}) | {r['G']} | {r['K']} |" for r in table]
    return "\n".join(lines)


def _verdict_line(c: cl.CaseReport) -> str:
    cites = ", ".join(sorted({cite for _, cite in c.verdict.reasons if cite}))
    return f"d={c.d}  {c.g.text():<12} k={c.k.text():<10} {c.verdict.kind}" + (f"  {cites}" if cites else "")


def _case_text(c: cl.CaseReport) -> str:
    out = [_verdict_line(c), f"  G = {c.g.group_text()}, K° = {c.k.group_text()}"]
    if c.candidates:
        out.append("  singular candidates: " + "; ".join(c.candidates))
    for b in c.branches:
        out.append(f"  [{b.label}] -> {b.verdict.kind}")
        for s in b.steps:
            args = ", ".join(f"{k}={v}" for k, v in s.args.items())
            cite = f" {s.citation}" if s.citation else ""
            note = f"  ({s.note})" if s.note else ""
            out.append(f"    {s.filter}({args}) = {s.result}{cite}{note}")
        for n in b.notes:
            out.append(f"    {n.kind}: {n.text}")
    return "\n".join(out)


def cmd_classify(args) -> int:
    try:
        report = cl.run_classification(jobs=args.jobs)
    except cl.IncompleteAnalysis as e:
        print(f"incomplete analysis: {e}", file=sys.stderr)
        return EXIT_INCOMPLETE
    match = golden_matches(report.table1, load_golden(args.golden))
    if args.format == "json":
        doc = {"command": "classify", **report.to_json(), "golden_match": match}
        print(_dump(doc))
    elif args.format == "markdown":
        print("# Cohomogeneity one actions on positively curved 7-manifolds\n")
        print("## Table 1: d = 2\n")
        print(table_markdown(report.table1))
        print("\n## Verdicts\n")
        print("| d | g | k | verdict |\n|---|---|---|---|")
        for c in report.cases:
            print(f"| {c.d} | {c.g.text()} | {c.k.text()} | {c.verdict.kind} |")
        print(f"\nSurvivors: {', '.join(report.survivors)}\n")
        print(report.theorem)
    else:
        for c in report.cases:
            print(_verdict_line(c))
        print("\nTable 1")
        for r in report.table1:
            print(f"  ({r['n']}) G = {r['G']}, K° = {r['K']}")
        print(f"\nsurvivors: {report.survivors}")
        print(report.theorem)
    if not match:
        print("Table 1 differs from the golden table", file=sys.stderr)
        return EXIT_GOLDEN
    return EXIT_OK


def cmd_case(args) -> int:
    try:
        case = cl.find_case(args.g, args.k)
    except (KeyError, ValueError, UnsupportedRank) as e:
        print(f"unknown case: {e}", file=sys.stderr)
        return EXIT_UNKNOWN_NAME
    if args.d is not None and args.d != case.d:
        print(f"({case.key[0]}, {case.key[1]}) has d = {case.d}, not {args.d}", file=sys.stderr)
        return EXIT_UNKNOWN_NAME
    try:
        report = cl.evaluate_case(case)
    except cl.IncompleteAnalysis as e:
        print(f"incomplete analysis: {e}", file=sys.stderr)
        return EXIT_INCOMPLETE
    if args.variant:
        wanted = VARIANTS.get(args.variant)
        branches = [b for b in report.branches if b.label == wanted]
        if not branches:
            print(f"variant {args.variant!r} does not apply to this case", file=sys.stderr)
            return EXIT_UNKNOWN_NAME
        report.branches = branches
        report.verdict = branches[0].verdict
    if args.format == "json":
        print(_dump({"command": "case", "variant": args.variant, "case": report.to_json()}))
    elif args.format == "markdown":
        print(f"## {report.g.group_text()} with K° = {report.k.group_text()}\n")
        print(f"Verdict: **{report.verdict.kind}**\n")
        print("```\n" + _case_text(report) + "\n```")
    else:
        print(_case_text(report))
    return EXIT_OK


def cmd_rep(args) -> int:
    try:
        q = evaluate(args.expr)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    value = q.value
    if q.query == "fs":
        value = f"{value} ({'real' if value == 'orthogonal' else 'quaternionic'})"
    note = None
    claimed = CLAIMED_INVARIANTS.get(normalize(q.expr))
    if q.query == "inv" and claimed is not None and claimed != q.value:
        note = f"computed {q.value} invariants; the second fundamental form argument assumes {claimed}"
    if args.format == "json":
        out = value if isinstance(value, (int, str)) else str(value)
        print(_dump({"command": "rep", "expr": normalize(q.expr), "query": q.query, "value": out, "note": note}))
    else:
        print(value)
        if note:
            print(f"note: {note}")
    return EXIT_OK


def cmd_verify_concavity(args) -> int:
    try:
        profile = concavity.resolve_profile(args.profile)
    except (KeyError, ValueError) as e:
        print(f"unknown profile: {e}", file=sys.stderr)
        return EXIT_UNKNOWN_NAME
    try:
        rep = concavity.verify_profile(profile, args.step, args.tol)
    except concavity.NonPositiveProfile as e:
        print(f"profile is not positive: {e}", file=sys.stderr)
        return EXIT_NON_POSITIVE
    except concavity.DomainMargin as e:
        print(f"domain too short: {e}", file=sys.stderr)
        return EXIT_TOLERANCE
    warning = None if rep.applicable else f"curvature is {rep.curvature_sign}: the concavity argument does not apply"
    if args.format == "json":
        print(_dump({"command": "verify-concavity", **rep.to_json(), "warning": warning}))
    else:
        status = "pass" if rep.passed else "fail"
        print(f"{rep.profile}: max residual {rep.max_residual:.3e} (tol {rep.tol:g}, step {rep.step:g}, "
              f"{rep.points} points) {status}")
        print(f"curvature {rep.curvature_sign}, concave {rep.concave}")
        if warning:
            print(f"warning: {warning}")
    return EXIT_OK if rep.passed else EXIT_TOLERANCE


def catalog_document() -> dict:
    hosts = {}
    for host, entries in sorted(cat.catalog().items(), key=lambda kv: (algebra(kv[0]).rank, algebra(kv[0]).dim, kv[0])):
        hosts[host] = [e.to_json() for e in entries]
    return {"version": 1, "hosts": hosts}


def cmd_catalog(args) -> int:
    doc = catalog_document()
    if args.host:
        try:
            key = algebra(args.host).text()
        except (KeyError, ValueError, UnsupportedRank):
            key = args.host
        if key not in doc["hosts"]:
            print(f"no catalog entries for {args.host!r}", file=sys.stderr)
            return EXIT_UNKNOWN_NAME
        doc["hosts"] = {key: doc["hosts"][key]}
    if args.format == "json":
        print(_dump({"command": "catalog", **doc}))
        return EXIT_OK
    md = args.format == "markdown"
    for host, entries in doc["hosts"].items():
        print(f"## {host}\n" if md else host)
        for e in entries:
            over = ", ".join(f"{o['k']} (slice kernel {o['slice_kernel']})" for o in e["over"])
            line = f"{e['label']}: {e['sub']} (dim {e['sub_dim']})" + (f" over {over}" if over else "")
            print(f"- {line}" if md else f"  {line}")
        if md:
            print()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "markdown", "json"), default=argparse.SUPPRESS)
    common.add_argument("--golden", metavar="PATH", default=argparse.SUPPRESS,
                        help="golden Table 1 JSON overriding the shipped one")

    parser = argparse.ArgumentParser(prog="cohom7", parents=[common],
                                     description="Cohomogeneity one actions on positively curved 7-manifolds")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="run the full case analysis")
    p.add_argument("--jobs", type=int, default=1, help="evaluate cases on this many threads")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("case", parents=[common], help="evaluate one (g, k) case")
    p.add_argument("--d", type=int)
    p.add_argument("--g", required=True)
    p.add_argument("--k", required=True)
    p.add_argument("--variant", choices=sorted(VARIANTS))
    p.set_defaults(func=cmd_case)

    p = sub.add_parser("rep", parents=[common], help="su(2) / torus representation calculator")
    p.add_argument("expr")
    p.set_defaults(func=cmd_rep)

    p = sub.add_parser("verify-concavity", parents=[common], help="check the Killing-norm identity on a profile")
    p.add_argument("--profile", default="cos")
    p.add_argument("--step", type=float, default=concavity.DEFAULT_STEP)
    p.add_argument("--tol", type=float, default=concavity.DEFAULT_TOL)
    p.set_defaults(func=cmd_verify_concavity)

    p = sub.add_parser("catalog", parents=[common], help="dump the subalgebra catalog")
    p.add_argument("--host")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    args.format = getattr(args, "format", "text")
    args.golden = getattr(args, "golden", None)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
