"""SP4: synchronous rounds in the Bellman-Ford style.

No heap and no worklist: every round relaxes all edges out of
discovered vertices at once (Jacobi — each round reads only the
previous round's labels), then fixes vertices by two rules.  The
threshold rule fixes any vertex whose label is at most the cheapest
possible exit from the non-fixed region, computed before any fixing so
the bound stays sound.  The bound rule mirrors SP3: lower bounds C rise
each round (first to the minimum non-fixed label, then by one
propagation sweep across in-edges) and a vertex with C = D is done.

Relaxation runs first in each round.  Fixing from a stale label — one
that has not yet absorbed the previous round's newly fixed vertices —
can lock in a non-optimal distance, so both fixing rules only ever see
labels that are up to date with respect to every earlier round.

Because each step is a pure function of the state left by the previous
barrier, splitting a step's vertex range across threads cannot change
the result; parallel mode reproduces the sequential rounds exactly.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor

from .costs import INF, cost_add
from .dijkstra import InvariantViolation
from .graph import Graph
from .metrics import Metrics, RunResult
from .sp3 import compute_out_weights


class Sp4State:
    def __init__(self, g: Graph, source: int, metrics: Metrics):
        n = g.n
        self.graph = g
        self.source = source
        self.metrics = metrics
        self.D = [INF] * n
        self.C = [0] * n
        self.fixed = [False] * n
        self.fixed_at = [None] * n
        self.out_weight = compute_out_weights(g)
        self.nonfixed = n
        self.changed = True
        self.round_count = 0
        self.newly_fixed = 0
        if n:
            self.D[source] = 0

    def fix(self, v: int) -> None:
        self.fixed[v] = True
        self.C[v] = self.D[v]
        self.fixed_at[v] = self.round_count
        self.nonfixed -= 1
        self.newly_fixed += 1


def sp4_round(s: Sp4State, g: Graph, pool=None, workers: int = 0) -> bool:
    """Execute one round; returns whether any label changed."""
    s.round_count += 1
    s.newly_fixed = 0
    n = g.n
    fixed = s.fixed

    # Relax every in-edge of a non-fixed vertex from last round's labels.
    old_d = list(s.D)
    changed = False
    for y, best, scans in _sweep(s, pool, workers, _relax_chunk, old_d):
        s.metrics.relaxations += scans
        if best < s.D[y]:
            s.D[y] = best
            changed = True
    s.changed = changed

    # Cheapest possible exit from the non-fixed region, and the cheapest
    # non-fixed label itself; both must predate any fixing this round.
    threshold = INF
    mind = INF
    for y in range(n):
        if fixed[y]:
            continue
        d = s.D[y]
        if d < mind:
            mind = d
        dout = cost_add(d, s.out_weight[y])
        if dout < threshold:
            threshold = dout

    # Threshold rule: no remaining path can undercut these labels.
    for y in range(n):
        if not fixed[y] and s.D[y] < INF and s.D[y] <= threshold:
            s.fix(y)

    # Bound rule, phase A: every non-fixed vertex costs at least mind.
    if mind < INF:
        for y in range(n):
            if not fixed[y] and s.C[y] < mind:
                s.C[y] = mind

    # Phase B: one propagation sweep over in-edges from phase-A values.
    old_c = list(s.C)
    for y, best, _ in _sweep(s, pool, workers, _bound_chunk, old_c):
        if best > s.C[y]:
            s.C[y] = best

    # Matching bounds pin the label.
    for y in range(n):
        if not fixed[y] and s.D[y] < INF and s.C[y] == s.D[y]:
            s.fix(y)

    s.metrics.frontier_sizes.append(s.newly_fixed)
    return changed


def _relax_chunk(s, ys, old_d):
    out = []
    in_adj = s.graph.in_adj
    for y in ys:
        best = INF
        scans = 0
        for x, w in in_adj[y]:
            if old_d[x] < INF:
                scans += 1
                c = cost_add(old_d[x], w)
                if c < best:
                    best = c
        out.append((y, best, scans))
    return out


def _bound_chunk(s, ys, old_c):
    out = []
    in_adj = s.graph.in_adj
    for y in ys:
        best = INF
        for x, w in in_adj[y]:
            c = cost_add(old_c[x], w)
            if c < best:
                best = c
        out.append((y, best, 0))
    return out


def _sweep(s, pool, workers, chunk_fn, snapshot):
    ys = [y for y in range(s.graph.n) if not s.fixed[y]]
    if pool is None or workers <= 1 or len(ys) < 2:
        return chunk_fn(s, ys, snapshot)
    chunks = [ys[i::workers] for i in range(workers)]
    results = []
    for part in pool.map(lambda c: chunk_fn(s, c, snapshot), chunks):
        results.extend(part)
    results.sort()
    return results


def run_sp4(g: Graph, source: int = 0, debug: bool = False,
            workers: int = 0, record_rounds: bool = False) -> RunResult:
    """Run SP4 on a pruned graph; workers > 1 enables data parallelism."""
    start = time.perf_counter()
    metrics = Metrics()
    s = Sp4State(g, source, metrics)

    cost = None
    prev_c = prev_d = None
    if debug:
        from .oracle import bellman_ford_oracle
        cost, _ = bellman_ford_oracle(g, source)

    trace = [] if record_rounds else None
    pool = ThreadPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        while s.changed and s.nonfixed:
            sp4_round(s, g, pool, workers)
            if record_rounds:
                trace.append((list(s.D), list(s.C), list(s.fixed)))
            if debug:
                _check_round(s, cost, prev_c, prev_d)
                prev_c, prev_d = list(s.C), list(s.D)
    finally:
        if pool is not None:
            pool.shutdown()

    metrics.rounds = s.round_count
    metrics.outer_iterations = s.round_count
    metrics.wall_time = time.perf_counter() - start
    return RunResult(dist=s.D, metrics=metrics, fixed_at_iteration=s.fixed_at,
                     algorithm="sp4", round_trace=trace)


def _check_round(s, cost, prev_c, prev_d) -> None:
    for x in range(s.graph.n):
        if not (s.C[x] <= cost[x] <= s.D[x]):
            raise InvariantViolation(
                f"vertex {x}: C={s.C[x]} cost={cost[x]} D={s.D[x]}")
        if s.fixed[x] and s.D[x] != cost[x]:
            raise InvariantViolation(f"fixed vertex {x} not at cost")
        if prev_c is not None:
            if s.C[x] < prev_c[x]:
                raise InvariantViolation(f"C[{x}] decreased")
            if s.D[x] > prev_d[x]:
                raise InvariantViolation(f"D[{x}] increased")
