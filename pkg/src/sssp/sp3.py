"""SP3: Dijkstra with per-vertex lower bounds.

Alongside the tentative distance D every vertex carries a lower bound C
on its true cost; a vertex whose bounds meet (C = D) is fixed without a
heap removal.  Two mechanisms tighten C during edge processing: a
crossing bound (the cheapest label any still-unfixed vertex can end up
with, so every non-fixed vertex costs at least that much) pushed onto
the non-fixed predecessors of the head, and a propagation step that
recomputes C of the head from the bounds of all its predecessors.

A second heap G, keyed by D[u] + outWeight[u], supplies a per-iteration
threshold: any vertex whose D is at or below the cheapest possible exit
from the non-fixed region cannot be improved, so the outer loop drains
all of them from H at once instead of removing a single minimum.
"""

from __future__ import annotations

import heapq
import threading
import time
from collections import deque
from concurrent.futures import ThreadPoolExecutor

from .costs import INF, cost_add
from .dijkstra import InvariantViolation
from .graph import Graph
from .heap import IndexedHeap
from .metrics import Metrics, RunResult


def compute_out_weights(g: Graph):
    """Minimum outgoing edge weight per vertex; infinity for sinks."""
    return [min((w for _, w in g.out_adj[v]), default=INF) for v in range(g.n)]


class Sp3State:
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
        self.min_in_weight = [min((w for _, w in g.in_adj[v]), default=INF)
                              for v in range(n)]
        self.H = IndexedHeap(n, self.fixed, metrics)
        self.G = IndexedHeap(n, self.fixed, metrics)
        self.R = deque()
        self.q_list = []
        self.in_q = [False] * n
        # Lazy min-heap over deferred labels; entries go stale when the
        # vertex is fixed or its label improves again.
        self._qheap = []
        self.iteration = 0
        self.fixed_in_iteration = 0
        # Lazy min-heap over fixed-but-unexplored vertices, keyed by the
        # cheapest way any still-unrelaxed edge can leave them.
        self._live = []
        self._explored = [False] * n

    def fix(self, v: int) -> None:
        self.fixed[v] = True
        self.C[v] = self.D[v]
        self.fixed_at[v] = self.iteration
        self.fixed_in_iteration += 1
        self.H.on_fixed(v)
        self.G.on_fixed(v)
        self.R.append(v)
        heapq.heappush(self._live,
                       (cost_add(self.D[v], self.out_weight[v]), v))

    def live_min(self):
        """Cheapest possible crossing via a fixed-but-unexplored vertex."""
        live = self._live
        while live and self._explored[live[0][1]]:
            heapq.heappop(live)
        return live[0][0] if live else INF

    def q_min(self):
        """Exact minimum label over the non-fixed members of Q."""
        q = self._qheap
        while q and (self.fixed[q[0][1]] or self.D[q[0][1]] != q[0][0]):
            heapq.heappop(q)
        return q[0][0] if q else INF

    def flush_q(self) -> None:
        for z in self.q_list:
            self.in_q[z] = False
            if not self.fixed[z]:
                self.H.insert_or_adjust(z, self.D[z])
                self.G.insert_or_adjust(z, cost_add(self.D[z],
                                                    self.out_weight[z]))
        self.q_list.clear()
        self._qheap.clear()


def process_edge3(s: Sp3State, z: int, k: int, w=None) -> None:
    """Relax (z, k) for fixed z and tighten lower bounds around k."""
    g = s.graph
    if w is None:
        w = g.weight(z, k)

    # Step 1: relax.
    nd = cost_add(s.D[z], w)
    changed = False
    if nd < s.D[k]:
        s.D[k] = nd
        changed = True

    # Step 2: every path to a non-fixed vertex crosses out of the fixed
    # region.  Already-relaxed crossing edges are reflected in a label
    # in H (possibly stale), in Q (fresh), or in k itself, which may not
    # have reached either container yet; crossings still to be relaxed
    # leave a fixed-but-unexplored vertex and cost at least its label
    # plus its cheapest out-edge.
    bound = s.H.get_min_nonfixed()
    qm = s.q_min()
    if qm < bound:
        bound = qm
    if s.D[k] < bound:
        bound = s.D[k]
    lm = s.live_min()
    if lm < bound:
        bound = lm
    if bound < INF:
        for v, _ in g.in_adj[k]:
            if not s.fixed[v] and s.C[v] < bound:
                s.C[v] = bound
                s.metrics.crossing_bound_tightened += 1

    # Step 3: propagate bounds across k's in-edges (fixed v have C = D).
    best = INF
    for v, wv in g.in_adj[k]:
        c = cost_add(s.C[v], wv)
        if c < best:
            best = c
    if best > s.C[k]:
        s.C[k] = best

    # Step 4: fixed point reached, or defer the heap write.
    if s.D[k] < INF and s.C[k] == s.D[k]:
        s.fix(k)
    elif changed:
        if not s.in_q[k]:
            s.in_q[k] = True
            s.q_list.append(k)
        heapq.heappush(s._qheap, (s.D[k], k))


def run_sp3(g: Graph, source: int = 0, debug: bool = False,
            workers: int = 0) -> RunResult:
    """Run SP3 on a pruned graph; workers > 1 explores R concurrently."""
    start = time.perf_counter()
    metrics = Metrics()
    s = Sp3State(g, source, metrics)

    cost = None
    prev_c = prev_d = None
    if debug:
        from .oracle import bellman_ford_oracle
        cost, _ = bellman_ford_oracle(g, source)

    if g.n:
        s.D[source] = 0
        s.H.insert_or_adjust(source, 0)
        s.G.insert_or_adjust(source, cost_add(0, s.out_weight[source]))

    while not s.H.is_effectively_empty:
        s.iteration += 1
        metrics.outer_iterations = s.iteration
        s.fixed_in_iteration = 0
        if debug:
            _check_bounds(s, cost)
            _check_monotone(s, prev_c, prev_d)
            prev_c, prev_d = list(s.C), list(s.D)
        threshold = s.G.get_min_nonfixed()
        while True:
            key = s.H.get_min_nonfixed()
            if key > threshold or key == INF:
                break
            j, _ = s.H.remove_min()
            s.fix(j)
        while True:
            if workers > 1:
                _explore_parallel(s, workers)
            else:
                _explore(s)
            s.flush_q()
            if not _in_version_drain(s):
                break
        metrics.frontier_sizes.append(s.fixed_in_iteration)

    if debug:
        _check_bounds(s, cost)
        _check_monotone(s, prev_c, prev_d)
    metrics.wall_time = time.perf_counter() - start
    return RunResult(dist=s.D, metrics=metrics, fixed_at_iteration=s.fixed_at,
                     algorithm="sp3")


def _in_version_drain(s: Sp3State) -> int:
    """Fix heap members that no remaining path can improve.

    Called once every fixed vertex has been explored and every pending
    label flushed, so hmin (the cheapest non-fixed label) lower-bounds
    the final cost of every non-fixed vertex.  A path into k that
    avoids the already-relaxed edges from explored vertices must arrive
    over an edge from an unexplored one and therefore costs at least
    hmin plus that edge's weight, so D[k] at or below that is final.
    Returns the number of vertices fixed; the caller re-explores them
    within the same iteration.
    """
    hmin = s.H.get_min_nonfixed()
    if hmin == INF:
        return 0
    drained = 0
    for key, k in s.H.nonfixed_entries():
        if s.fixed[k]:
            continue
        if key > cost_add(hmin, s.min_in_weight[k]):
            # The cheap bound uses the lightest in-edge overall; edges
            # from explored vertices are already relaxed and reflected
            # in the label, so only the others can carry an improvement.
            floor = min((w for v, w in s.graph.in_adj[k]
                         if not s._explored[v]), default=INF)
            if key > cost_add(hmin, floor):
                continue
        s.fix(k)
        drained += 1
    return drained


def _explore(s: Sp3State) -> None:
    out_adj = s.graph.out_adj
    while s.R:
        z = s.R.popleft()
        for k, w in out_adj[z]:
            if s.fixed[k]:
                continue
            s.metrics.relaxations += 1
            process_edge3(s, z, k, w)
        s._explored[z] = True


def _explore_parallel(s: Sp3State, workers: int) -> None:
    """Explore R in waves; a coarse lock serialises state updates, so
    each parallel run is some sequentially-consistent edge order and the
    final distances match the reference mode."""
    lock = threading.Lock()

    def work(chunk):
        for z in chunk:
            for k, w in s.graph.out_adj[z]:
                with lock:
                    if not s.fixed[k]:
                        s.metrics.relaxations += 1
                        process_edge3(s, z, k, w)
            with lock:
                s._explored[z] = True

    with ThreadPoolExecutor(max_workers=workers) as pool:
        while s.R:
            wave = list(s.R)
            s.R.clear()
            chunks = [wave[i::workers] for i in range(workers)]
            list(pool.map(work, chunks))


def _check_monotone(s, prev_c, prev_d) -> None:
    if prev_c is None:
        return
    for x in range(s.graph.n):
        if s.C[x] < prev_c[x]:
            raise InvariantViolation(f"C[{x}] decreased")
        if s.D[x] > prev_d[x]:
            raise InvariantViolation(f"D[{x}] increased")


def _check_bounds(s: Sp3State, cost) -> None:
    for x in range(s.graph.n):
        if not (s.C[x] <= cost[x] <= s.D[x]):
            raise InvariantViolation(
                f"vertex {x}: C={s.C[x]} cost={cost[x]} D={s.D[x]}")
        if s.fixed[x] and not (s.C[x] == s.D[x] == cost[x]):
            raise InvariantViolation(f"fixed vertex {x} has open bounds")
    s.H.check_invariants()
    s.G.check_invariants()
