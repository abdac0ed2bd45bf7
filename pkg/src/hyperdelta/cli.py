"""Command-line front end: ``hyperdelta {delta,stats,construct,extremal,verify}``.

Exit codes: 0 success, 1 usage error, 2 invalid graph, 3 cap or budget
exceeded, 4 verification mismatch.
"""
from __future__ import annotations

import argparse
import csv
import io
import sys
from typing import List, Optional, Sequence

from .constructions import (
    ChainSpec,
    ThetaSpec,
    basic,
    chain,
    gamma,
    lambda_,
    theta,
    witness_e,
    witness_v,
)
from .errors import ConstructionError, GraphError, LimitExceeded, NotAdmissibleError
from .extremal import EDGE, QUANTITIES, VERTEX, extremal_interval
from .graph import format_edge_list, read_edge_list
from .hyperbolicity import default_workers, delta_bounds, delta_exact
from .metric import diameters
from .structure import circumference, girth, t_decomposition
from .verify import CSV_COLUMNS, csv_row, empirical_extremal, sweep, theorem_suite
from .enumeration import EnumerationQuery

EXIT_OK, EXIT_USAGE, EXIT_GRAPH, EXIT_LIMIT, EXIT_MISMATCH = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse exits with 2 otherwise
        raise UsageError(f"{self.prog}: {message}")


def _ints(text: str) -> List[int]:
    return [int(x) for x in text.split(",") if x.strip()] if text else []


# -- subcommands ----------------------------------------------------------------------

def _cmd_delta(args, out) -> int:
    graph = read_edge_list(args.file)
    if args.bounds_only:
        iv = delta_bounds(graph)
        label = "value" if iv.exact else "bounds"
        shown = iv.lower.describe() if iv.exact else f"[{iv.lower.describe()}, {iv.upper.describe()}]"
        print(f"{label} = {shown}", file=out)
        for tag in iv.provenance:
            print(f"  {tag}", file=out)
        return EXIT_OK
    res = delta_exact(graph, geodesic_cap=args.geodesic_cap, triple_budget=args.triple_budget, workers=args.threads)
    print(f"delta = {res.value.describe()}", file=out)
    corners = ", ".join(str(p) for p in res.witness_triangle.corners)
    print(f"witness triangle: {corners}", file=out)
    for side in res.witness_triangle.sides:
        print(f"  side {side}", file=out)
    print(f"witness point: {res.witness_point}", file=out)
    print(f"triangles examined: {res.triangles_examined}", file=out)
    return EXIT_OK


def _cmd_stats(args, out) -> int:
    graph = read_edge_list(args.file)
    rep = diameters(graph)
    g, c = girth(graph), circumference(graph)
    rows = [
        ("n", graph.n),
        ("m", graph.m),
        ("girth", "none" if g is None else g),
        ("circumference", "none" if c is None else c),
        ("diam_vertices", rep.diam_vertices),
        ("diam_metric", rep.diam_metric),
        ("diam_effective", rep.diam_effective),
        ("components", len(t_decomposition(graph))),
    ]
    for key, val in rows:
        print(f"{key} = {val}", file=out)
    return EXIT_OK


def _cmd_construct(args, out) -> int:
    p = args.params
    kind = args.kind

    def need(k: int) -> List[int]:
        if len(p) != k:
            raise UsageError(f"construct {kind} takes {k} integer argument(s), got {len(p)}")
        return p

    if kind in ("cycle", "path", "complete"):
        (size,) = need(1)
        graph, note = basic(kind, size), f"{kind}({size})"
    elif kind == "theta":
        a1, a2, a3 = need(3)
        graph, note = theta(ThetaSpec(a1, a2, a3)), f"theta({a1},{a2},{a3})"
    elif kind == "chain":
        need(0)
        alpha = _ints(args.alpha)
        spec = ChainSpec(len(alpha), alpha, _ints(args.beta), _ints(args.betap))
        graph = chain(spec)
        note = f"chain alpha={args.alpha} beta={args.beta} betap={args.betap or '-'}"
    elif kind == "gamma":
        (c,) = need(1)
        graph, note = gamma(c), f"gamma({c})"
    elif kind == "lambda":
        (c,) = need(1)
        graph, note = lambda_(c), f"lambda({c})"
    elif kind == "witness-v":
        g, c, n = need(3)
        graph, note = witness_v(g, c, n), f"member of G({g},{c},{n})"
    else:
        g, c, m = need(3)
        graph, note = witness_e(g, c, m), f"member of H({g},{c},{m})"
    text = format_edge_list(graph, note)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


def _cmd_extremal(args, out) -> int:
    iv = extremal_interval(args.quantity, args.g, args.c, args.count)
    tags = "; ".join(t.strip() for t in iv.provenance)
    if iv.exact:
        print(f"value = {iv.lower.describe()} (exact) [{tags}]", file=out)
    else:
        print(f"bounds = [{iv.lower.describe()}, {iv.upper.describe()}] [{tags}]", file=out)
    return EXIT_OK


def _write_csv(path: str, reports) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for rep in reports:
        writer.writerow(csv_row(rep))
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(buf.getvalue())


def _cmd_verify(args, out) -> int:
    threads = args.threads
    if args.invariants:
        top = args.max if args.max is not None else 5
        rep = theorem_suite(EnumerationQuery(max_vertices=top), workers=threads)
        print(f"checked {rep.graphs_checked} graphs with at most {top} vertices", file=out)
        for name, count in rep.counts().items():
            print(f"  {name}: {count} violation(s)", file=out)
        for v in rep.violations:
            print(f"violation of {v.invariant}: {v.detail}\n{v.edge_list}", file=out)
        return EXIT_OK if rep.ok else EXIT_MISMATCH

    single = (args.g, args.c, args.count)
    if any(x is not None for x in single):
        if args.max is not None or any(x is None for x in single):
            raise UsageError("give either --g, --c and --count together, or --max")
        reports = [empirical_extremal(args.mode, args.g, args.c, args.count, workers=threads)]
    else:
        reports = sweep(args.mode, args.max if args.max is not None else 6, workers=threads)
    for rep in reports:
        print(rep.summary(), file=out)
        for note in rep.notes:
            print(f"  {note}", file=out)
    if args.csv:
        _write_csv(args.csv, reports)
    return EXIT_OK if all(r.consistent for r in reports) else EXIT_MISMATCH


# -- parser ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hyperdelta", description="Exact Gromov hyperbolicity of small unit-edge graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("delta", help="exact hyperbolicity constant of an edge-list file")
    p.add_argument("file")
    p.add_argument("--bounds-only", action="store_true", help="print the cheap girth/diameter interval only")
    p.add_argument("--geodesic-cap", type=int, default=None)
    p.add_argument("--triple-budget", type=int, default=None)
    p.add_argument("--threads", type=int, default=None)
    p.set_defaults(run=_cmd_delta)

    p = sub.add_parser("stats", help="girth, circumference, diameters and block count")
    p.add_argument("file")
    p.set_defaults(run=_cmd_stats)

    p = sub.add_parser("construct", help="write a generated graph as an edge list")
    p.add_argument("kind", choices=["cycle", "path", "complete", "theta", "chain", "gamma", "lambda", "witness-v", "witness-e"])
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--alpha", default="", help="chain: comma-separated alpha_1..alpha_k")
    p.add_argument("--beta", default="", help="chain: comma-separated beta_0..beta_k")
    p.add_argument("--betap", default="", help="chain: comma-separated beta'_1..beta'_{k-1}")
    p.add_argument("-o", "--output")
    p.set_defaults(run=_cmd_construct)

    p = sub.add_parser("extremal", help="value or bounds of A, B, alpha or beta")
    p.add_argument("quantity", choices=QUANTITIES)
    p.add_argument("g", type=int)
    p.add_argument("c", type=int)
    p.add_argument("count", type=int)
    p.set_defaults(run=_cmd_extremal)

    p = sub.add_parser("verify", help="compare formulas with exhaustive enumeration")
    p.add_argument("--mode", choices=[VERTEX, EDGE], default=VERTEX)
    p.add_argument("--g", type=int)
    p.add_argument("--c", type=int)
    p.add_argument("--count", "--n", "--m", dest="count", type=int)
    p.add_argument("--max", type=int, help="sweep every admissible triplet up to this count")
    p.add_argument("--invariants", action="store_true", help="run the graph invariant suite instead")
    p.add_argument("--csv")
    p.add_argument("--threads", type=int, default=None)
    p.set_defaults(run=_cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "threads", None) is None:
            args.threads = default_workers()
        return args.run(args, out)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except (NotAdmissibleError, ConstructionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphError, OSError) as exc:
        print(f"invalid graph: {exc}", file=sys.stderr)
        return EXIT_GRAPH
    except LimitExceeded as exc:
        print(f"limit exceeded: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
