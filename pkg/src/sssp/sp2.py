"""SP2: SP1 plus an in-weight fixing rule.

When a vertex k is discovered we record inWeight[k], the cheapest
incoming edge other than the discovering one.  Any later path into k
must pass through some not-yet-fixed vertex, and d_eff tracks a lower
bound on the cost of every such vertex.  So once
D[k] <= d_eff + inWeight[k], no alternative route can beat the current
label and k is fixed without ever touching the heap.

d_eff is the minimum over three groups that together cover every vertex
a cheaper path could still run through: fixed-but-unexplored vertices
(the FIFO worklist R plus the vertex currently being explored), deferred
heap writes in Q, and the heap root.  On unweighted graphs this makes
every discovery fix immediately, so the whole run is a plain BFS with a
single heap insert and removal.
"""

from __future__ import annotations

from collections import deque

from .costs import INF, cost_add
from .graph import Graph
from .metrics import RunResult
from .sp1 import Sp1State, _run_worklist


class Sp2State(Sp1State):
    def __init__(self, g: Graph, source: int, metrics):
        super().__init__(g, source, metrics)
        self.in_weight = [INF] * g.n
        self.qmin = INF
        # Sliding-window minimum of D over the FIFO worklist R.
        self.rmin = deque()
        self.z = source

    def fix(self, v: int) -> None:
        super().fix(v)
        d = self.D[v]
        while self.rmin and self.rmin[-1] > d:
            self.rmin.pop()
        self.rmin.append(d)

    def on_explore(self, z: int) -> None:
        if self.rmin and self.rmin[0] == self.D[z]:
            self.rmin.popleft()
        self.z = z

    def flush_q(self) -> None:
        super().flush_q()
        self.qmin = INF

    def d_eff(self):
        """Lower bound on the final cost of every non-fixed vertex."""
        d = self.D[self.z]
        if self.rmin and self.rmin[0] < d:
            d = self.rmin[0]
        if self.qmin < d:
            d = self.qmin
        h = self.H.peek_root_key()
        if h < d:
            d = h
        return d


def process_edge2(s: Sp2State, z: int, k: int, w=None) -> None:
    """Relax (z, k) for fixed z, fixing k by pred count or in-weight."""
    if w is None:
        w = s.graph.weight(z, k)
    s.pred[k] -= 1
    if s.D[k] == INF and s.pred[k] > 0:
        s.in_weight[k] = min(
            (wv for v, wv in s.graph.in_adj[k] if v != z), default=INF)
    nd = cost_add(s.D[z], w)
    changed = False
    if nd < s.D[k]:
        s.D[k] = nd
        changed = True
    if s.pred[k] == 0 or s.D[k] <= cost_add(s.d_eff(), s.in_weight[k]):
        s.fix(k)
    elif changed:
        if not s.in_q[k]:
            s.in_q[k] = True
            s.q_list.append(k)
        if s.D[k] < s.qmin:
            s.qmin = s.D[k]


def run_sp2(g: Graph, source: int = 0, debug: bool = False) -> RunResult:
    """Run SP2 on a pruned graph (only the source may lack in-edges)."""
    return _run_worklist(g, source, Sp2State, process_edge2, "sp2", debug)
