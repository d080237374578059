"""Deterministic graph generators for testing and benchmarking.

Families:
  random(n, m, wmax, seed)     arbitrary simple digraph
  dag(n, m, wmax, seed)        acyclic, vertex 0 first in topo order
  unweighted(n, m, seed)       all weights 1
  grid(rows, cols, wmax, seed) lattice with edges in both directions
  star_last(n)                 adversarial: the vertex Dijkstra fixes
                               last has out-edges to all others
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .graph import Graph, build_graph


class InfeasibleSpecError(ValueError):
    """Generator parameters cannot produce a valid graph."""


FAMILIES = ("random", "dag", "unweighted", "grid", "star_last")


@dataclass(frozen=True)
class GenSpec:
    family: str
    params: dict = field(default_factory=dict)

    def describe(self) -> str:
        inner = ",".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        return f"{self.family}:{inner}"


def parse_genspec(text: str) -> GenSpec:
    """Parse 'family:key=val,key=val' strings used on the CLI."""
    family, _, rest = text.partition(":")
    family = family.strip()
    if family not in FAMILIES:
        raise InfeasibleSpecError(f"unknown family {family!r}")
    params = {}
    if rest.strip():
        for item in rest.split(","):
            key, _, val = item.partition("=")
            if not _:
                raise InfeasibleSpecError(f"bad parameter {item!r}")
            try:
                params[key.strip()] = int(val)
            except ValueError:
                raise InfeasibleSpecError(f"bad parameter {item!r}") from None
    return GenSpec(family, params)


def _sample_pairs(rng, n, m, ordered_only=False):
    """Sample m distinct vertex pairs; u<v positions when ordered_only."""
    limit = n * (n - 1) // 2 if ordered_only else n * (n - 1)
    if m > limit:
        raise InfeasibleSpecError(f"m={m} exceeds maximum {limit} for n={n}")
    # Dense request: enumerate, otherwise rejection-sample.
    if limit <= 4 * m and limit <= 2_000_000:
        if ordered_only:
            population = [(u, v) for u in range(n) for v in range(u + 1, n)]
        else:
            population = [(u, v) for u in range(n) for v in range(n) if u != v]
        return rng.sample(population, m)
    pairs = set()
    while len(pairs) < m:
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v:
            continue
        if ordered_only and u > v:
            u, v = v, u
        pairs.add((u, v))
    return sorted(pairs)


def gen_random(n, m, wmax=100, seed=0) -> Graph:
    if n < 1 or wmax < 1:
        raise InfeasibleSpecError("need n >= 1 and wmax >= 1")
    rng = random.Random(seed)
    edges = [(u, v, rng.randint(1, wmax)) for u, v in _sample_pairs(rng, n, m)]
    return build_graph(n, edges)


def gen_dag(n, m, wmax=100, seed=0) -> Graph:
    """Random DAG; vertex 0 is first in the topological order."""
    if n < 1 or wmax < 1:
        raise InfeasibleSpecError("need n >= 1 and wmax >= 1")
    rng = random.Random(seed)
    order = list(range(1, n))
    rng.shuffle(order)
    order = [0] + order          # position -> vertex
    edges = [(order[i], order[j], rng.randint(1, wmax))
             for i, j in _sample_pairs(rng, n, m, ordered_only=True)]
    return build_graph(n, edges)


def gen_unweighted(n, m, seed=0) -> Graph:
    if n < 1:
        raise InfeasibleSpecError("need n >= 1")
    rng = random.Random(seed)
    edges = [(u, v, 1) for u, v in _sample_pairs(rng, n, m)]
    return build_graph(n, edges)


def gen_grid(rows, cols, wmax=100, seed=0) -> Graph:
    """rows x cols lattice; every adjacent pair gets edges both ways."""
    if rows < 1 or cols < 1 or wmax < 1:
        raise InfeasibleSpecError("need rows, cols, wmax >= 1")
    rng = random.Random(seed)
    n = rows * cols
    edges = []
    for r in range(rows):
        for c in range(cols):
            u = r * cols + c
            if c + 1 < cols:
                v = u + 1
                edges.append((u, v, rng.randint(1, wmax)))
                edges.append((v, u, rng.randint(1, wmax)))
            if r + 1 < rows:
                v = u + cols
                edges.append((u, v, rng.randint(1, wmax)))
                edges.append((v, u, rng.randint(1, wmax)))
    return build_graph(n, edges)


def gen_star_last(n) -> Graph:
    """Worst case for predecessor counting.

    Vertex n-1 has an incoming edge from every other vertex, so it can
    only be fixed after all of them are explored (it is Dijkstra's
    last-fixed vertex), yet it has out-edges to all others, which makes
    every intermediate vertex wait on it and fall back to the heap.
    """
    if n < 3:
        raise InfeasibleSpecError("star_last needs n >= 3")
    big = n * n
    edges = []
    for i in range(1, n - 1):
        edges.append((0, i, i))
    for i in range(n - 1):
        edges.append((i, n - 1, big))
    for j in range(n - 1):
        if j != n - 1:
            edges.append((n - 1, j, 1))
    return build_graph(n, edges)


def generate(spec: GenSpec) -> Graph:
    """Build the graph described by spec; deterministic per seed."""
    p = dict(spec.params)
    try:
        if spec.family == "random":
            return gen_random(p.pop("n"), p.pop("m"),
                              p.pop("wmax", 100), p.pop("seed", 0))
        if spec.family == "dag":
            return gen_dag(p.pop("n"), p.pop("m"),
                           p.pop("wmax", 100), p.pop("seed", 0))
        if spec.family == "unweighted":
            return gen_unweighted(p.pop("n"), p.pop("m"), p.pop("seed", 0))
        if spec.family == "grid":
            return gen_grid(p.pop("rows"), p.pop("cols"),
                            p.pop("wmax", 100), p.pop("seed", 0))
        if spec.family == "star_last":
            return gen_star_last(p.pop("n"))
    except KeyError as exc:
        raise InfeasibleSpecError(f"missing parameter {exc}") from None
    raise InfeasibleSpecError(f"unknown family {spec.family!r}")
