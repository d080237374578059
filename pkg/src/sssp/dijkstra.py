"""Instrumented reference Dijkstra, the baseline for every comparison."""

from __future__ import annotations

import time

from .costs import INF, cost_add
from .graph import Graph
from .heap import IndexedHeap
from .metrics import Metrics, RunResult


class InvariantViolation(AssertionError):
    """Raised by debug-mode invariant checks in any solver."""


def run_dijkstra(g: Graph, source: int = 0, debug: bool = False) -> RunResult:
    """Classic label-setting loop: pop the minimum, fix it, relax out-edges.

    The heap holds exactly the discovered non-fixed vertices.  With
    debug=True the textbook invariants are re-checked against an
    independently computed cost array at every outer loop head.
    """
    n = g.n
    start = time.perf_counter()
    metrics = Metrics()
    D = [INF] * n
    fixed = [False] * n
    fixed_at = [None] * n
    H = IndexedHeap(n, fixed, metrics)

    cost = None
    if debug:
        from .oracle import bellman_ford_oracle
        cost, _ = bellman_ford_oracle(g, source)

    if n:
        D[source] = 0
        H.insert_or_adjust(source, 0)

    out_adj = g.out_adj
    iteration = 0
    last_key = 0
    while len(H):
        if debug:
            _check_loop_head(n, D, fixed, H, cost)
        j, d = H.remove_min()
        if debug and d < last_key:
            raise InvariantViolation("removeMin keys must be nondecreasing")
        last_key = d
        iteration += 1
        metrics.outer_iterations = iteration
        fixed[j] = True
        fixed_at[j] = iteration
        metrics.frontier_sizes.append(1)
        dj = D[j]
        for k, w in out_adj[j]:
            if fixed[k]:
                continue
            metrics.relaxations += 1
            nd = cost_add(dj, w)
            if nd < D[k]:
                D[k] = nd
                H.insert_or_adjust(k, nd)

    metrics.wall_time = time.perf_counter() - start
    return RunResult(dist=D, metrics=metrics, fixed_at_iteration=fixed_at,
                     algorithm="dijkstra")


def _check_loop_head(n, D, fixed, H, cost):
    for x in range(n):
        if fixed[x] and D[x] != cost[x]:
            raise InvariantViolation(f"fixed vertex {x}: D={D[x]} cost={cost[x]}")
        in_heap = x in H
        should = D[x] != INF and not fixed[x]
        if in_heap != should:
            raise InvariantViolation(
                f"heap membership broken for {x}: in_heap={in_heap}")
    H.check_invariants()
