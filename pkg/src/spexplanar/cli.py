"""Command-line entry point: one binary, subcommand style, machine-clean output.

Graphs travel as graph6 (stdin or --input file), results as single JSON
objects on stdout with floats at 15 significant digits and fixed field order.
Errors go to stderr as one-line JSON.  Exit codes: 0 ok, 1 domain error,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path

from .families import (
    ForbiddenPattern,
    PathPartition,
    cll_pattern,
    cycle,
    extremal_construction,
    join_k2,
    k2_bipartite,
    k2_plus,
    path,
    realize_partition,
    theta_family,
)
from .freeness import condition_oracle_agreement, contains_subgraph
from .graphs import Graph, parse_graph6, to_graph6
from .planarity import planarity_check
from .search import SearchReport, exhaustive_search, family_search, verify_transformation_ascent
from .spectral import (
    DEFAULT_MAX_ITER,
    DEFAULT_TOL,
    perron_bounds_report,
    spectral_radius,
)

TOL_ENV_VAR = "SPEXPLANAR_TOL"


def _default_tol() -> float:
    raw = os.environ.get(TOL_ENV_VAR)
    if raw is None:
        return DEFAULT_TOL
    try:
        return float(raw)
    except ValueError:
        raise ValueError(f"cannot parse {TOL_ENV_VAR}={raw!r} as a float") from None


def render_json(obj) -> str:
    """Serialize with floats at 15 significant digits and stable field order."""
    if obj is None:
        return "null"
    if obj is True:
        return "true"
    if obj is False:
        return "false"
    if isinstance(obj, float):
        if math.isnan(obj) or math.isinf(obj):
            raise ValueError("cannot serialize non-finite float")
        return format(obj, ".15g")
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        body = ", ".join(f"{json.dumps(str(k))}: {render_json(v)}" for k, v in obj.items())
        return "{" + body + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(render_json(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj)!r}")


def _read_graph(input_path: str | None) -> Graph:
    if input_path:
        text = Path(input_path).read_text()
    else:
        text = sys.stdin.read()
    for line in text.splitlines():
        if line.strip():
            return parse_graph6(line.strip())
    raise ValueError("no graph6 input found")


def _emit(payload: dict, out_path: str | None) -> None:
    text = render_json({"status": "ok", **payload})
    print(text)
    if out_path:
        Path(out_path).write_text(text + "\n")


def _write_csv(report: SearchReport, csv_path: str) -> None:
    lines = ["rank,graph6,rho,residual,flags"]
    flags = list(report.gap_flags) + [""]
    for i, c in enumerate(report.ranked):
        lines.append(
            f"{i + 1},{c.graph6},{format(c.rho, '.15g')},{format(c.residual, '.15g')},{flags[i]}"
        )
    Path(csv_path).write_text("\n".join(lines) + "\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spexplanar",
        description="Spectral-extremal verification toolkit for planar graphs "
        "with forbidden double-cycle or Theta subgraphs.",
    )
    parser.add_argument("--seed", type=int, default=None,
                        help="reserved for randomized corpus generation; the core "
                             "commands are deterministic and ignore it")
    parser.add_argument("--jobs", type=int, default=1,
                        help="worker count for search commands (deterministic merge)")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="emit named family graphs as graph6")
    c.add_argument("--family", required=True,
                   choices=["path", "cycle", "cll", "theta", "k2-bipartite",
                            "k2-plus", "extremal", "join-partition"])
    c.add_argument("--n", type=int)
    c.add_argument("--l", type=int)
    c.add_argument("--k", type=int)
    c.add_argument("--forbid", help="pattern for --family extremal, e.g. cll:4 or theta:6")
    c.add_argument("--partition", help="comma-separated parts for --family join-partition")

    r = sub.add_parser("rho", help="spectral radius of a graph6 graph")
    r.add_argument("--input")
    r.add_argument("--perron", action="store_true", help="include the Perron vector")
    r.add_argument("--tol", type=float, default=None)
    r.add_argument("--max-iter", type=int, default=DEFAULT_MAX_ITER)
    r.add_argument("--out")

    p = sub.add_parser("planar", help="planarity of a graph6 graph")
    p.add_argument("--input")
    p.add_argument("--out")

    f = sub.add_parser("check-free", help="forbidden-subgraph freeness of a graph6 graph")
    f.add_argument("--pattern", required=True, help="cll:L or theta:K")
    f.add_argument("--input")
    f.add_argument("--out")

    q = sub.add_parser("predicate", help="arithmetic freeness condition on a path partition")
    q.add_argument("--claim", required=True, choices=["4", "8", "c33"])
    q.add_argument("--partition", required=True)
    q.add_argument("--l", type=int)
    q.add_argument("--k", type=int)
    q.add_argument("--out")

    o = sub.add_parser("oracle-vs-predicate",
                       help="exhaustive agreement between condition and subgraph oracle")
    o.add_argument("--claim", required=True, choices=["4", "8", "c33"])
    o.add_argument("--l", type=int)
    o.add_argument("--k", type=int)
    o.add_argument("--max-total", type=int, required=True)
    o.add_argument("--out")

    fs = sub.add_parser("family-search", help="rank admissible path-union joins by rho")
    fs.add_argument("--forbid", required=True)
    fs.add_argument("--n", type=int, required=True)
    fs.add_argument("--top", type=int, default=3)
    fs.add_argument("--out")
    fs.add_argument("--csv")

    es = sub.add_parser("extremal-search", help="exhaustive or streamed max-rho search")
    es.add_argument("--forbid", required=True)
    es.add_argument("--n", type=int, required=True)
    es.add_argument("--input", help="graph6 stream file (default: internal enumeration)")
    es.add_argument("--internal", action="store_true")
    es.add_argument("--trust-planar", action="store_true")
    es.add_argument("--skip-malformed", action="store_true",
                    help="skip bad stream lines with a diagnostic instead of failing")
    es.add_argument("--top", type=int, default=5)
    es.add_argument("--out")
    es.add_argument("--csv")

    pr = sub.add_parser("perron-report", help="Perron entries of a join against the 2/rho band")
    pr.add_argument("--input")
    pr.add_argument("--out")

    ta = sub.add_parser("transform-ascent", help="check path-shift moves around a partition")
    ta.add_argument("--forbid", required=True)
    ta.add_argument("--n", type=int, required=True)
    ta.add_argument("--partition", required=True)
    ta.add_argument("--out")
    return parser


class UsageError(ValueError):
    pass


def _cmd_construct(args) -> None:
    fam = args.family

    def need(value, flag):
        if value is None:
            raise UsageError(f"--family {fam} requires {flag}")
        return value

    if fam == "path":
        graphs = [path(need(args.n, "--n"))]
    elif fam == "cycle":
        graphs = [cycle(need(args.n, "--n"))]
    elif fam == "cll":
        graphs = [cll_pattern(need(args.l, "--l"))]
    elif fam == "theta":
        graphs = theta_family(need(args.k, "--k"))
    elif fam == "k2-bipartite":
        graphs = [k2_bipartite(need(args.n, "--n"))]
    elif fam == "k2-plus":
        graphs = [k2_plus(need(args.n, "--n"))]
    elif fam == "extremal":
        pat = ForbiddenPattern.parse(need(args.forbid, "--forbid"))
        graphs = [extremal_construction(pat, need(args.n, "--n"))]
    else:  # join-partition
        parts = PathPartition.parse(need(args.partition, "--partition"))
        graphs = [join_k2(realize_partition(parts))]
    for g in graphs:
        print(to_graph6(g))


def _cmd_rho(args) -> None:
    g = _read_graph(args.input)
    tol = args.tol if args.tol is not None else _default_tol()
    result = spectral_radius(g, tol, args.max_iter)
    payload = {
        "rho": result.rho,
        "iterations": result.iterations,
        "residual": result.residual,
    }
    if args.perron:
        payload["perron"] = list(result.perron)
    _emit(payload, args.out)


def _cmd_planar(args) -> None:
    g = _read_graph(args.input)
    result = planarity_check(g)
    _emit({"planar": result.planar, "reason": result.reason}, args.out)


def _cmd_check_free(args) -> None:
    g = _read_graph(args.input)
    pat = ForbiddenPattern.parse(args.pattern)
    free = all(not contains_subgraph(g, m) for m in pat.member_graphs())
    _emit({"pattern": pat.label(), "free": free}, args.out)


def _claim_kind(args) -> tuple[str, int]:
    if args.claim == "4":
        if args.l is None:
            raise UsageError("--claim 4 requires --l")
        return "cll", args.l
    if args.claim == "8":
        if args.k is None:
            raise UsageError("--claim 8 requires --k")
        return "theta", args.k
    return "c33", 3


def _cmd_predicate(args) -> None:
    from .freeness import (
        c33_join_free_condition,
        cll_join_free_condition,
        theta_join_free_condition,
    )

    kind, param = _claim_kind(args)
    parts = PathPartition.parse(args.partition)
    if kind == "cll":
        free = cll_join_free_condition(parts, param)
    elif kind == "theta":
        free = theta_join_free_condition(parts, param)
    else:
        free = c33_join_free_condition(parts)
    _emit({"claim": args.claim, "parameter": param, "partition": parts.text(), "free": free},
          args.out)


def _cmd_oracle_vs_predicate(args) -> None:
    kind, param = _claim_kind(args)
    report = condition_oracle_agreement(kind, param, args.max_total)
    _emit(
        {
            "claim": args.claim,
            "kind": report.kind,
            "parameter": report.parameter,
            "max_total": report.max_total,
            "checked": report.checked,
            "mismatch_count": len(report.mismatches),
            "mismatches": [
                {
                    "partition": ",".join(str(x) for x in m.parts),
                    "condition_says_free": m.condition_says_free,
                    "oracle_says_free": m.oracle_says_free,
                }
                for m in report.mismatches
            ],
            "agreement": report.agreement,
        },
        args.out,
    )


def _cmd_family_search(args) -> None:
    pat = ForbiddenPattern.parse(args.forbid)
    report = family_search(pat, args.n, top_k=args.top, jobs=args.jobs)
    if args.csv:
        _write_csv(report, args.csv)
    _emit(report.to_dict(), args.out)


def _cmd_extremal_search(args) -> None:
    pat = ForbiddenPattern.parse(args.forbid)
    if args.input and args.internal:
        raise UsageError("choose either --input FILE or --internal, not both")
    if args.input:
        lines = Path(args.input).read_text().splitlines()
        report = exhaustive_search(
            args.n, pat, source="stream", graph6_lines=lines,
            trust_planar=args.trust_planar, strict=not args.skip_malformed,
            top_k=args.top, jobs=args.jobs,
        )
    else:
        report = exhaustive_search(args.n, pat, source="internal",
                                   top_k=args.top, jobs=args.jobs)
    if args.csv:
        _write_csv(report, args.csv)
    _emit(report.to_dict(), args.out)


def _cmd_perron_report(args) -> None:
    g = _read_graph(args.input)
    report = perron_bounds_report(g, tol=_default_tol())
    _emit(
        {
            "rho": report.rho,
            "lower": report.lower,
            "upper": report.upper,
            "entries": [
                {"vertex": e.vertex, "value": e.value, "inside": e.inside}
                for e in report.entries
            ],
            "all_inside": report.all_inside,
        },
        args.out,
    )


def _cmd_transform_ascent(args) -> None:
    pat = ForbiddenPattern.parse(args.forbid)
    parts = PathPartition.parse(args.partition)
    report = verify_transformation_ascent(parts, pat, args.n)
    _emit(report.to_dict(), args.out)


_HANDLERS = {
    "construct": _cmd_construct,
    "rho": _cmd_rho,
    "planar": _cmd_planar,
    "check-free": _cmd_check_free,
    "predicate": _cmd_predicate,
    "oracle-vs-predicate": _cmd_oracle_vs_predicate,
    "family-search": _cmd_family_search,
    "extremal-search": _cmd_extremal_search,
    "perron-report": _cmd_perron_report,
    "transform-ascent": _cmd_transform_ascent,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        _HANDLERS[args.command](args)
    except UsageError as exc:
        print(render_json({"status": "error", "message": str(exc)}), file=sys.stderr)
        return 2
    except (ValueError, RuntimeError, OSError) as exc:
        print(render_json({"status": "error", "message": str(exc)}), file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
