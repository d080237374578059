"""Immutable directed graph with dual adjacency.

Vertices are integers 0..n-1.  Both out-edges and in-edges are stored,
because the predecessor-counting and lower-bound solvers need constant
time access to the incoming edges of any vertex.  Graphs are validated
at construction: strictly positive weights, no self loops, no duplicate
(u, v) pairs.
"""

from __future__ import annotations

from .costs import U64_MAX


class GraphError(ValueError):
    """Base class for graph construction failures."""


class SelfLoopError(GraphError):
    def __init__(self, u):
        super().__init__(f"self loop at vertex {u}")
        self.vertex = u


class DuplicateEdgeError(GraphError):
    def __init__(self, u, v):
        super().__init__(f"duplicate edge ({u}, {v})")
        self.edge = (u, v)


class NonPositiveWeightError(GraphError):
    def __init__(self, u, v, w):
        super().__init__(f"edge ({u}, {v}) has non-positive weight {w}")
        self.edge = (u, v, w)


class VertexOutOfRangeError(GraphError):
    def __init__(self, u, n):
        super().__init__(f"vertex {u} out of range for n={n}")
        self.vertex = u


class Graph:
    """Validated directed graph, immutable after construction."""

    __slots__ = ("n", "m", "edges", "out_adj", "in_adj", "source")

    def __init__(self, n, edges, out_adj, in_adj, source=0):
        self.n = n
        self.m = len(edges)
        self.edges = edges          # tuple of (u, v, w)
        self.out_adj = out_adj      # tuple of tuples of (v, w)
        self.in_adj = in_adj        # tuple of tuples of (u, w)
        self.source = source

    def in_degree(self, v: int) -> int:
        return len(self.in_adj[v])

    def out_degree(self, v: int) -> int:
        return len(self.out_adj[v])

    def weight(self, u: int, v: int):
        """Weight of edge (u, v); raises KeyError when absent."""
        for t, w in self.out_adj[u]:
            if t == v:
                return w
        raise KeyError((u, v))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m}, source={self.source})"


def build_graph(n: int, edges, source: int = 0) -> Graph:
    """Validate an edge list and build dual adjacency.

    Edge order is preserved in out_adj/in_adj, which makes every solver
    in this package fully deterministic for a given input.
    """
    if not (0 <= source < n) and n > 0:
        raise VertexOutOfRangeError(source, n)
    out_adj = [[] for _ in range(n)]
    in_adj = [[] for _ in range(n)]
    seen = set()
    kept = []
    for u, v, w in edges:
        if not (0 <= u < n):
            raise VertexOutOfRangeError(u, n)
        if not (0 <= v < n):
            raise VertexOutOfRangeError(v, n)
        if u == v:
            raise SelfLoopError(u)
        if (u, v) in seen:
            raise DuplicateEdgeError(u, v)
        if not isinstance(w, int) or w <= 0 or w > U64_MAX:
            raise NonPositiveWeightError(u, v, w)
        seen.add((u, v))
        kept.append((u, v, w))
        out_adj[u].append((v, w))
        in_adj[v].append((u, w))
    return Graph(
        n,
        tuple(kept),
        tuple(tuple(a) for a in out_adj),
        tuple(tuple(a) for a in in_adj),
        source,
    )


def prune_unreachable_roots(g: Graph, source: int = 0):
    """Iteratively delete non-source vertices with no incoming edges.

    Returns (pruned graph, removed vertex set).  Vertex ids are kept
    stable; removed vertices simply lose all their edges, so they come
    out of every solver with distance INF.  Each edge is examined at
    most once overall.
    """
    indeg = [g.in_degree(v) for v in range(g.n)]
    removed = set()
    stack = [v for v in range(g.n) if v != source and indeg[v] == 0]
    while stack:
        u = stack.pop()
        if u in removed:
            continue
        removed.add(u)
        for v, _w in g.out_adj[u]:
            indeg[v] -= 1
            if indeg[v] == 0 and v != source and v not in removed:
                stack.append(v)
    if not removed:
        return g, frozenset()
    edges = [(u, v, w) for (u, v, w) in g.edges
             if u not in removed and v not in removed]
    return build_graph(g.n, edges, source), frozenset(removed)
