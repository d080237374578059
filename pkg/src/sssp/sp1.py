"""SP1: Dijkstra plus predecessor counting.

Each vertex tracks how many of its incoming edges are still unrelaxed.
When the count hits zero the current tentative distance is already the
true cost, so the vertex is fixed immediately and explored through the
FIFO worklist R instead of going through the heap.  Heap writes for
vertices that merely improved are deferred in Q and flushed only after
R drains, skipping anything that got fixed in the meantime.
"""

from __future__ import annotations

import time
from collections import deque

from .costs import INF, cost_add
from .dijkstra import InvariantViolation
from .graph import Graph
from .heap import IndexedHeap
from .metrics import Metrics, RunResult


class Sp1State:
    """Mutable per-run state; shared by SP1 and (via subclass) SP2."""

    def __init__(self, g: Graph, source: int, metrics: Metrics):
        n = g.n
        self.graph = g
        self.source = source
        self.metrics = metrics
        self.D = [INF] * n
        self.fixed = [False] * n
        self.fixed_at = [None] * n
        self.pred = [g.in_degree(v) for v in range(n)]
        self.H = IndexedHeap(n, self.fixed, metrics)
        self.R = deque()
        self.q_list = []
        self.in_q = [False] * n
        self.iteration = 0
        self.fixed_in_iteration = 0

    def fix(self, v: int) -> None:
        self.fixed[v] = True
        self.fixed_at[v] = self.iteration
        self.fixed_in_iteration += 1
        self.H.on_fixed(v)
        self.R.append(v)

    def flush_q(self) -> None:
        for z in self.q_list:
            self.in_q[z] = False
            if not self.fixed[z]:
                self.H.insert_or_adjust(z, self.D[z])
        self.q_list.clear()


def process_edge1(s: Sp1State, z: int, k: int, w=None) -> None:
    """Relax (z, k) for fixed z, maintaining predecessor counts."""
    if w is None:
        w = s.graph.weight(z, k)
    s.pred[k] -= 1
    nd = cost_add(s.D[z], w)
    changed = False
    if nd < s.D[k]:
        s.D[k] = nd
        changed = True
    if s.pred[k] == 0:
        s.fix(k)
    elif changed and not s.in_q[k]:
        s.in_q[k] = True
        s.q_list.append(k)


def run_sp1(g: Graph, source: int = 0, debug: bool = False) -> RunResult:
    """Run SP1 on a pruned graph (only the source may lack in-edges)."""
    return _run_worklist(g, source, Sp1State, process_edge1, "sp1", debug)


def _run_worklist(g, source, state_cls, edge_fn, name, debug) -> RunResult:
    """Common outer/inner worklist loop shared by SP1 and SP2."""
    start = time.perf_counter()
    metrics = Metrics()
    s = state_cls(g, source, metrics)

    cost = None
    explored = None
    if debug:
        from .oracle import bellman_ford_oracle
        cost, _ = bellman_ford_oracle(g, source)
        explored = [False] * g.n

    if g.n:
        s.D[source] = 0
        s.H.insert_or_adjust(source, 0)

    out_adj = g.out_adj
    while not s.H.is_effectively_empty:
        if debug:
            _check_outer_head(s, cost)
        j, d = s.H.remove_min()
        if s.fixed[j]:
            continue            # stale entry: already fixed via pred count
        s.iteration += 1
        metrics.outer_iterations = s.iteration
        s.fixed_in_iteration = 0
        s.on_outer_remove(j, d)
        s.fix(j)
        if debug and s.D[j] != cost[j]:
            raise InvariantViolation(f"popped vertex {j} has D != cost")
        while s.R:
            if debug:
                _check_inner_head(s, cost, explored)
            z = s.R.popleft()
            s.on_explore(z)
            dz = s.D[z]
            for k, w in out_adj[z]:
                if s.fixed[k]:
                    continue
                metrics.relaxations += 1
                edge_fn(s, z, k, w)
                if debug and s.fixed[k] and s.D[k] != cost[k]:
                    raise InvariantViolation(
                        f"vertex {k} fixed at D={s.D[k]} but cost={cost[k]}")
            assert s.D[z] == dz, "exploring a fixed vertex must not change it"
            if debug:
                explored[z] = True
        s.flush_q()
        metrics.frontier_sizes.append(s.fixed_in_iteration)

    metrics.wall_time = time.perf_counter() - start
    return RunResult(dist=s.D, metrics=metrics, fixed_at_iteration=s.fixed_at,
                     algorithm=name, in_weight=getattr(s, "in_weight", None))


# Hook points used by SP2; no-ops for SP1.
Sp1State.on_outer_remove = lambda self, j, d: None
Sp1State.on_explore = lambda self, z: None


def _check_outer_head(s, cost):
    # fixed => optimal, and every discovered non-fixed vertex sits in H.
    for x in range(s.graph.n):
        if s.fixed[x]:
            if s.D[x] != cost[x]:
                raise InvariantViolation(f"fixed {x}: D={s.D[x]} cost={cost[x]}")
        elif s.D[x] != INF and x not in s.H:
            raise InvariantViolation(f"discovered non-fixed {x} missing from H")
    s.H.check_invariants()


def _check_inner_head(s, cost, explored):
    # R holds exactly the fixed-but-unexplored vertices; pending heap
    # updates may still be parked in Q at this point.
    in_r = set(s.R)
    for x in range(s.graph.n):
        should = s.fixed[x] and not explored[x]
        if (x in in_r) != should:
            raise InvariantViolation(f"R membership broken for {x}")
        if s.fixed[x] and s.D[x] != cost[x]:
            raise InvariantViolation(f"fixed {x}: D={s.D[x]} cost={cost[x]}")
        if not s.fixed[x] and s.D[x] != INF:
            if x not in s.H and not s.in_q[x]:
                raise InvariantViolation(f"discovered {x} in neither H nor Q")
