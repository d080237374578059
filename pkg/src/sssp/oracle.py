"""Independent Bellman-Ford oracle and run comparison.

The oracle is the trust anchor for differential tests: it shares no
relaxation helper with the solvers, and each pass reads only the
previous pass's distances, so its iteration count is well defined
(independent of edge order) and comparable with SP4's round count.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .costs import INF
from .graph import Graph
from .metrics import RunResult


class DistMismatchError(AssertionError):
    def __init__(self, algorithm, vertex, got, expected):
        super().__init__(
            f"{algorithm}: dist[{vertex}] = {got}, oracle says {expected}")
        self.algorithm = algorithm
        self.vertex = vertex
        self.got = got
        self.expected = expected


def bellman_ford_oracle(g: Graph, source: int = 0):
    """Exact shortest costs by repeated full-edge relaxation.

    Returns (dist, iterations) where iterations counts full passes
    including the final pass that makes no change.
    """
    dist = [INF] * g.n
    if g.n:
        dist[source] = 0
    iterations = 0
    edges = g.edges
    while True:
        iterations += 1
        prev = dist[:]
        changed = False
        for u, v, w in edges:
            du = prev[u]
            if du != INF and du + w < dist[v]:
                dist[v] = du + w
                changed = True
        if not changed:
            break
    return dist, iterations


def check_optimality(g: Graph, dist, source: int = 0) -> None:
    """Assert the Bellman optimality condition on a distance array."""
    for u, v, w in g.edges:
        if dist[u] != INF:
            assert dist[v] <= dist[u] + w, f"edge ({u},{v},{w}) violates optimality"
    for v in range(g.n):
        if v == source or dist[v] == INF:
            continue
        assert any(dist[u] != INF and dist[u] + w == dist[v]
                   for u, w in g.in_adj[v]), f"no tight in-edge for {v}"


@dataclass
class ComparisonReport:
    oracle_dist: list
    mismatches: list = field(default_factory=list)   # DistMismatchError
    metric_rows: list = field(default_factory=list)  # dict per algorithm
    dominance: dict = field(default_factory=dict)    # check name -> bool

    @property
    def ok(self) -> bool:
        return not self.mismatches and all(self.dominance.values())

    def to_json(self) -> str:
        return json.dumps({
            "mismatches": [
                {"algorithm": e.algorithm, "vertex": e.vertex,
                 "got": repr(e.got), "expected": repr(e.expected)}
                for e in self.mismatches
            ],
            "metrics": self.metric_rows,
            "dominance": self.dominance,
            "ok": self.ok,
        }, indent=2)

    def to_table(self) -> str:
        cols = ["algorithm", "heap_inserts", "heap_adjusts",
                "heap_remove_mins", "heap_ops_total", "relaxations",
                "outer_iterations", "rounds", "max_frontier"]
        rows = [[str(r.get(c, "")) for c in cols] for r in self.metric_rows]
        widths = [max(len(c), *(len(r[i]) for r in rows)) if rows else len(c)
                  for i, c in enumerate(cols)]
        out = ["  ".join(c.ljust(w) for c, w in zip(cols, widths))]
        for r in rows:
            out.append("  ".join(v.ljust(w) for v, w in zip(r, widths)))
        for name, passed in self.dominance.items():
            out.append(f"check {name}: {'pass' if passed else 'FAIL'}")
        if self.mismatches:
            out.append(f"{len(self.mismatches)} distance mismatch(es)")
        return "\n".join(out)


def _heap_dominance(rows_by_name) -> bool:
    order = [n for n in ("sp2", "sp1", "dijkstra") if n in rows_by_name]
    totals = [rows_by_name[n]["heap_ops_total"] for n in order]
    return all(a <= b for a, b in zip(totals, totals[1:]))


def _fix_iteration_dominance(results_by_name) -> bool:
    order = [n for n in ("sp3", "sp2", "sp1") if n in results_by_name]
    for earlier, later in zip(order, order[1:]):
        a = results_by_name[earlier].fixed_at_iteration
        b = results_by_name[later].fixed_at_iteration
        for va, vb in zip(a, b):
            if vb is not None and (va is None or va > vb):
                return False
    return True


def compare_runs(results, oracle_dist, strict: bool = True) -> ComparisonReport:
    """Compare solver results against the oracle distance array.

    `results` is a list of RunResult (each carrying .algorithm) or a
    dict name -> RunResult.  Raises DistMismatchError on the first
    mismatch unless strict=False, in which case all mismatches are
    collected in the report.
    """
    if isinstance(results, dict):
        named = list(results.items())
    else:
        named = [(r.algorithm or f"run{i}", r) for i, r in enumerate(results)]
    report = ComparisonReport(oracle_dist=list(oracle_dist))
    by_name: dict[str, RunResult] = {}
    for name, res in named:
        by_name[name] = res
        for v, (got, want) in enumerate(zip(res.dist, oracle_dist)):
            if got != want:
                err = DistMismatchError(name, v, got, want)
                if strict:
                    raise err
                report.mismatches.append(err)
        row = {"algorithm": name}
        row.update(res.metrics.as_dict())
        report.metric_rows.append(row)
    rows_by_name = {r["algorithm"]: r for r in report.metric_rows}
    if sum(n in rows_by_name for n in ("sp2", "sp1", "dijkstra")) >= 2:
        report.dominance["heap-dominance"] = _heap_dominance(rows_by_name)
    if sum(n in by_name for n in ("sp3", "sp2", "sp1")) >= 2:
        report.dominance["fix-iteration"] = _fix_iteration_dominance(by_name)
    return report
