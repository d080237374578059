"""Command-line front end: generate, run, compare, bench.

Exit codes: 0 success, 1 validation failure, 2 distance mismatch,
3 property violation (failed dominance/bounds check).
"""

from __future__ import annotations

import argparse
import csv
import json
import statistics
import sys
import time

from .costs import INF
from .dijkstra import InvariantViolation, run_dijkstra
from .dimacs import parse_dimacs, serialize_dimacs
from .generators import generate, parse_genspec
from .graph import GraphError, prune_unreachable_roots
from .metrics import Metrics, RunResult
from .oracle import DistMismatchError, bellman_ford_oracle, compare_runs
from .sp1 import run_sp1
from .sp2 import run_sp2
from .sp3 import run_sp3
from .sp4 import run_sp4

ALGORITHMS = ("dijkstra", "sp1", "sp2", "sp3", "sp4", "oracle")
PARALLEL_WORKERS = 4


def _load_graph(args):
    if getattr(args, "graph", None):
        with open(args.graph) as fh:
            return parse_dimacs(fh.read(), source=args.source)
    if getattr(args, "gen", None):
        spec = args.gen[0] if isinstance(args.gen, list) else args.gen
        return generate(parse_genspec(spec))
    raise GraphError("one of --graph or --gen is required")


def _run_one(name, g, pruned, source, debug=False, parallel=False):
    workers = PARALLEL_WORKERS if parallel else 0
    if name == "dijkstra":
        return run_dijkstra(g, source, debug=debug)
    if name == "sp1":
        return run_sp1(pruned, source, debug=debug)
    if name == "sp2":
        return run_sp2(pruned, source, debug=debug)
    if name == "sp3":
        return run_sp3(pruned, source, debug=debug, workers=workers)
    if name == "sp4":
        return run_sp4(pruned, source, debug=debug, workers=workers)
    if name == "oracle":
        start = time.perf_counter()
        dist, iters = bellman_ford_oracle(g, source)
        m = Metrics(outer_iterations=iters,
                    wall_time=time.perf_counter() - start)
        fixed_at = [1 if d != INF else None for d in dist]
        return RunResult(dist=dist, metrics=m, fixed_at_iteration=fixed_at,
                         algorithm="oracle")
    raise GraphError(f"unknown algorithm {name!r}")


def _emit(rows, fmt, out=None):
    if out is None:
        out = sys.stdout
    if fmt == "json":
        json.dump(rows, out, indent=2, default=str)
        out.write("\n")
    elif fmt == "csv":
        cols = sorted({k for r in rows for k in r})
        writer = csv.DictWriter(out, fieldnames=cols)
        writer.writeheader()
        writer.writerows(rows)
    else:
        cols = sorted({k for r in rows for k in r})
        svals = [[str(r.get(c, "")) for c in cols] for r in rows]
        widths = [max(len(c), *(len(v[i]) for v in svals))
                  for i, c in enumerate(cols)]
        out.write("  ".join(c.ljust(w) for c, w in zip(cols, widths)) + "\n")
        for v in svals:
            out.write("  ".join(s.ljust(w) for s, w in zip(v, widths)) + "\n")


def cmd_gen(args) -> int:
    g = generate(parse_genspec(args.gen))
    text = serialize_dimacs(g, comment=args.gen)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_run(args) -> int:
    g = _load_graph(args)
    pruned, removed = prune_unreachable_roots(g, args.source)
    rows = []
    for name in args.algo or ["dijkstra"]:
        res = _run_one(name, g, pruned, args.source,
                       debug=args.debug_invariants,
                       parallel=args.parallel == "on")
        row = {"algorithm": name, "n": g.n, "m": g.m,
               "pruned_vertices": len(removed),
               "dist": [None if d == INF else d for d in res.dist]}
        row.update(res.metrics.as_dict())
        rows.append(row)
    _emit(rows, args.format)
    return 0


def cmd_compare(args) -> int:
    names = args.algo or ["dijkstra", "sp1", "sp2", "sp3", "sp4"]
    if len(names) < 2:
        raise GraphError("compare needs at least two algorithms")
    g = _load_graph(args)
    pruned, _removed = prune_unreachable_roots(g, args.source)
    oracle_dist, _ = bellman_ford_oracle(g, args.source)
    debug = args.debug_invariants or "bounds" in (args.check or [])
    results = {}
    for name in names:
        if name == "oracle":
            continue
        results[name] = _run_one(name, g, pruned, args.source,
                                 debug=debug,
                                 parallel=args.parallel == "on")
    report = compare_runs(results, oracle_dist, strict=False)
    if args.format == "json":
        print(report.to_json())
    else:
        print(report.to_table())
    if report.mismatches:
        return 2
    wanted = set(args.check or [])
    failed = [name for name, passed in report.dominance.items()
              if not passed and (not wanted or name in wanted)]
    if failed:
        return 3
    return 0


def cmd_bench(args) -> int:
    specs = args.gen or []
    if args.graph:
        specs = [None]
    if not specs:
        raise GraphError("bench needs --gen (repeatable) or --graph")
    names = args.algo or ["dijkstra", "sp1", "sp2", "sp3", "sp4"]
    rows = []
    for spec in specs:
        if spec is None:
            with open(args.graph) as fh:
                g = parse_dimacs(fh.read(), source=args.source)
            label = args.graph
        else:
            g = generate(parse_genspec(spec))
            label = spec
        pruned, _ = prune_unreachable_roots(g, args.source)
        for name in names:
            times, last = [], None
            for _ in range(args.reps):
                last = _run_one(name, g, pruned, args.source,
                                parallel=args.parallel == "on")
                times.append(last.metrics.wall_time)
            md = last.metrics.as_dict()
            rows.append({
                "graph": label, "algorithm": name, "n": g.n, "m": g.m,
                "heap_ops": md["heap_ops_total"],
                "relaxations": md["relaxations"],
                "iterations": md["outer_iterations"],
                "rounds": md["rounds"],
                "max_frontier": md["max_frontier"],
                "wall_time": statistics.median(times),
            })
    out = sys.stdout
    if args.out:
        out = open(args.out, "w")
    try:
        _emit(rows, args.format or "csv", out)
    finally:
        if args.out:
            out.close()
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sssp-lab",
        description="Shortest-path algorithm laboratory")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt_default="table"):
        p.add_argument("--graph", help="DIMACS .gr input file")
        p.add_argument("--gen", action="append",
                       help="generator spec, e.g. random:n=50,m=200,seed=1")
        p.add_argument("--source", type=int, default=0)
        p.add_argument("--format", choices=("json", "csv", "table"),
                       default=fmt_default)
        p.add_argument("--debug-invariants", action="store_true")
        p.add_argument("--parallel", choices=("off", "on"), default="off")

    p_gen = sub.add_parser("gen", help="generate a graph file")
    p_gen.add_argument("--gen", required=True,
                       help="generator spec, e.g. dag:n=100,m=400,seed=7")
    p_gen.add_argument("--out", help="output path (default stdout)")
    p_gen.set_defaults(func=cmd_gen)

    p_run = sub.add_parser("run", help="run solvers on one graph")
    p_run.add_argument("--algo", action="append", choices=ALGORITHMS)
    common(p_run, "json")
    p_run.set_defaults(func=cmd_run)

    p_cmp = sub.add_parser("compare", help="differential run vs oracle")
    p_cmp.add_argument("--algo", action="append", choices=ALGORITHMS)
    p_cmp.add_argument("--check", action="append",
                       choices=("heap-dominance", "fix-iteration", "bounds"))
    common(p_cmp)
    p_cmp.set_defaults(func=cmd_compare)

    p_bench = sub.add_parser("bench", help="benchmark over graph specs")
    p_bench.add_argument("--algo", action="append", choices=ALGORITHMS)
    p_bench.add_argument("--reps", type=int, default=1)
    p_bench.add_argument("--out", help="output path (default stdout)")
    common(p_bench, "csv")
    p_bench.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DistMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 3
    except (GraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
