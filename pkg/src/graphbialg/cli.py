"""Command-line entry point: ``graphbialg <command> ...``.

Every command builds a JSON report.  A short summary goes to stdout (or the
full JSON with ``--json``); ``--out`` writes the full report to a file.

Exit codes: 0 ok, 1 verification failed, 2 input error, 3 theorem cross-check
violation.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from collections import Counter
from pathlib import Path

from .algebra import check_algebra, from_graph
from .classify import classify_diagonal, parameter_table
from .cobracket import Cobracket, CobracketFormatError, verify
from .graph import (GraphParseError, graphs_without_isolated_vertices,
                    min_degree_at_least_two, parse_graph)
from .invariants import invariants_report
from .tst import tst_report

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_CROSSCHECK = 0, 1, 2, 3


class InputError(Exception):
    pass


def _read_graph(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from exc
    try:
        return parse_graph(text)
    except GraphParseError as exc:
        raise InputError(f"{path}: {exc}") from exc


def _describe(g) -> str:
    edges = ", ".join(f"{i + 1}-{j + 1}" for i, j in g.edges)
    return f"graph: {g.vertex_count} vertices; edges {edges}"


def cmd_info(args):
    g = _read_graph(args.graph)
    a = from_graph(g)
    check = check_algebra(a)
    report = {"command": "info", "graph": g.to_json(), "dim_w": a.dim_w, "dim_z": a.dim_z,
              "degrees": g.degrees(), "algebra_check": check.to_json()}
    summary = [_describe(g),
               f"dim W = {a.dim_w}, dim z = {a.dim_z}",
               f"degrees: {g.degrees()}",
               f"algebra check: {'pass' if check.ok else 'FAIL'}"]
    return report, summary, EXIT_OK if check.ok else EXIT_FAILED


def cmd_invariants(args):
    g = _read_graph(args.graph)
    a = from_graph(g)
    inv = invariants_report(a)
    predicted = min_degree_at_least_two(g)
    consistent = inv.equal == predicted
    report = {"command": "invariants", "graph": g.to_json(), **inv.to_json(a.labels),
              "min_degree_at_least_two": predicted, "theorem_consistent": consistent}
    summary = [_describe(g),
               f"dim invariants = {inv.dim_invariants}, dim Lambda^2 z = {inv.dim_lambda2z}",
               f"invariants equal Lambda^2 z: {inv.equal}",
               f"min degree >= 2: {predicted}",
               "theorem cross-check: " + ("ok" if consistent else "VIOLATION")]
    return report, summary, EXIT_OK if consistent else EXIT_CROSSCHECK


def cmd_tst(args):
    g = _read_graph(args.graph)
    a = from_graph(g)
    rep = tst_report(a)
    mindeg = min_degree_at_least_two(g)
    corollary_ok = rep.tst_type or not mindeg
    ok = corollary_ok and not rep.zero_pattern_violations
    report = {"command": "tst", "graph": g.to_json(), **rep.to_json(),
              "min_degree_at_least_two": mindeg, "corollary_consistent": corollary_ok}
    summary = [_describe(g),
               f"TST solution dimension = {rep.solution_dim} "
               f"({'TST type' if rep.tst_type else 'not TST type'})",
               f"zero-pattern violations: {len(rep.zero_pattern_violations)}",
               "theorem cross-check: " + ("ok" if ok else "VIOLATION")]
    return report, summary, EXIT_OK if ok else EXIT_CROSSCHECK


def cmd_verify(args):
    try:
        obj = json.loads(Path(args.cobracket).read_text())
        d = Cobracket.from_json(obj)
    except OSError as exc:
        raise InputError(f"{args.cobracket}: {exc.strerror or exc}") from exc
    except (json.JSONDecodeError, CobracketFormatError, GraphParseError) as exc:
        raise InputError(f"{args.cobracket}: {exc}") from exc
    rep = verify(d)
    report = {"command": "verify", **rep.to_json(d.algebra.labels)}
    summary = [f"co-Jacobi: {'pass' if rep.cojacobi.ok else 'FAIL'}",
               f"1-cocycle: {'pass' if rep.cocycle.ok else 'FAIL'}",
               f"nearly coboundary: {rep.nearly_coboundary}"]
    if rep.containment is not None:
        summary.append(f"structural containment: {'pass' if rep.containment.ok else 'FAIL'}")
    for name, r in (("co-Jacobi", rep.cojacobi), ("cocycle", rep.cocycle)):
        for key, vec in r.residuals.items():
            summary.append(f"  {name} residual at {key}: {vec.pretty(d.algebra.labels)}")
    summary.append("bialgebra: " + ("yes" if rep.is_bialgebra else "no"))
    return report, summary, EXIT_OK if rep.is_bialgebra else EXIT_FAILED


def cmd_classify(args):
    g = _read_graph(args.graph)
    rep = classify_diagonal(g)
    report = {"command": "classify", "mode": "diagonal", **rep.to_json()}
    summary = [_describe(g),
               f"lambda system dimension = {rep.lambda_dim}",
               f"forced-zero lambdas: {len(rep.forced_zero)}",
               f"omega parameters (lambda = 0): {rep.omega_free_parameters}",
               f"omega parameters (generic lambda): {rep.omega_free_parameters_generic}"]
    summary += [f"caveat: {c}" for c in rep.caveats]
    code = EXIT_OK
    if not rep.parity_consistent:
        summary.append("parity certificate cross-check: VIOLATION")
        code = EXIT_CROSSCHECK
    return report, summary, code


def cmd_table(args):
    if args.max_n < 3:
        raise InputError("--max-n must be at least 3")
    rows = parameter_table(range(3, args.max_n + 1))
    report = {"command": "table",
              "columns": ["n", "C_n |V||A|", "C_n |V|C(|A|,2)",
                          "K_n |V||A|", "K_n |V|C(|A|,2)"],
              "rows": [[r.n, *r.as_tuple()] for r in rows],
              "closed_form_ok": all(r.closed_form_ok for r in rows)}
    summary = ["  n  C_n:|V||A|  C_n:|V|C(|A|,2)  K_n:|V||A|  K_n:|V|C(|A|,2)"]
    summary += [f"{r.n:>3}  {r.cycle_va:>10}  {r.cycle_omega:>15}  {r.complete_va:>10}  "
                f"{r.complete_omega:>15}" for r in rows]
    ok = report["closed_form_ok"]
    if not ok:
        summary.append("closed-form cross-check: VIOLATION")
    return report, summary, EXIT_OK if ok else EXIT_CROSSCHECK


def sweep(max_vertices: int) -> dict:
    """Cross-check the valency theorem, the TST corollary and the zero pattern
    on every graph without isolated vertices up to ``max_vertices``."""
    per_n = Counter()
    tst_per_n = Counter()
    mindeg_count = 0
    violations = []
    for g in graphs_without_isolated_vertices(max_vertices):
        a = from_graph(g)
        per_n[g.vertex_count] += 1
        mindeg = min_degree_at_least_two(g)
        mindeg_count += mindeg
        inv = invariants_report(a)
        if inv.equal != mindeg:
            violations.append({"graph": g.to_json(), "kind": "valency",
                               "invariants_equal": inv.equal, "min_degree_at_least_two": mindeg})
        rep = tst_report(a)
        if rep.tst_type:
            tst_per_n[g.vertex_count] += 1
        if mindeg and not rep.tst_type:
            violations.append({"graph": g.to_json(), "kind": "tst_corollary",
                               "solution_dim": rep.solution_dim})
        if rep.zero_pattern_violations:
            violations.append({"graph": g.to_json(), "kind": "zero_pattern",
                               "entries": [[i + 1, j + 1] for i, j in rep.zero_pattern_violations]})
    return {"max_vertices": max_vertices,
            "graphs": sum(per_n.values()),
            "graphs_by_vertices": {str(n): per_n[n] for n in sorted(per_n)},
            "min_degree_at_least_two": mindeg_count,
            "tst_type": sum(tst_per_n.values()),
            "tst_type_by_vertices": {str(n): tst_per_n[n] for n in sorted(per_n)},
            "violations": violations}


def cmd_sweep(args):
    if not 2 <= args.max_vertices <= 7:
        raise InputError("--max-vertices must be between 2 and 7")
    t0 = time.perf_counter()
    result = sweep(args.max_vertices)
    elapsed = time.perf_counter() - t0
    report = {"command": "sweep", **result}
    summary = [f"graphs without isolated vertices, up to {args.max_vertices} vertices: "
               f"{result['graphs']}",
               f"by vertex count: {result['graphs_by_vertices']}",
               f"min degree >= 2: {result['min_degree_at_least_two']}",
               f"TST type: {result['tst_type']}",
               f"theorem violations: {len(result['violations'])}",
               f"time: {elapsed:.1f} s"]
    return report, summary, EXIT_CROSSCHECK if result["violations"] else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", metavar="PATH", help="write the full JSON report here")
    common.add_argument("--json", action="store_true", help="print the JSON report to stdout")

    p = argparse.ArgumentParser(prog="graphbialg",
                                description="Lie bialgebra tools for 2-step nilpotent graph algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    for name, func, helptext in (
            ("info", cmd_info, "algebra dimensions, degrees and structure check"),
            ("invariants", cmd_invariants, "ad-invariant bivectors vs Lambda^2 z"),
            ("tst", cmd_tst, "solve the TST equations")):
        sp = sub.add_parser(name, parents=[common], help=helptext)
        sp.add_argument("graph", help="graph file")
        sp.set_defaults(func=func)

    sp = sub.add_parser("verify", parents=[common], help="check both bialgebra axioms")
    sp.add_argument("cobracket", help="cobracket JSON file")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("classify", parents=[common],
                        help="classify nearly-coboundary cobrackets with diagonal D")
    sp.add_argument("graph", help="graph file")
    sp.add_argument("--diagonal", action="store_true",
                    help="diagonal D-family (the only mode; accepted for explicitness)")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("table", parents=[common], help="parameter counts for C_n and K_n")
    sp.add_argument("--max-n", type=int, default=6)
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("sweep", parents=[common],
                        help="exhaustive theorem cross-check over small graphs")
    sp.add_argument("--max-vertices", type=int, default=6)
    sp.set_defaults(func=cmd_sweep)
    return p


def dump_json(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report, summary, code = args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    text = dump_json(report)
    if args.out:
        try:
            Path(args.out).write_text(text)
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc.strerror or exc}", file=sys.stderr)
            return EXIT_INPUT
    if args.json:
        sys.stdout.write(text)
    else:
        print("\n".join(summary))
    return code


if __name__ == "__main__":
    sys.exit(main())
