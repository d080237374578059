"""Shortest-path algorithm laboratory.

Instrumented Dijkstra plus four refinements (SP1-SP4) that fix vertices
early via predecessor counting, in-weight tests, lower bounds, and
synchronous rounds, with an independent Bellman-Ford oracle,
deterministic graph generators, DIMACS I/O, and a benchmark CLI.
"""

from .costs import INF, U64_MAX, CostOverflowError, cost_add
from .dijkstra import InvariantViolation, run_dijkstra
from .dimacs import parse_dimacs, serialize_dimacs
from .generators import GenSpec, generate, parse_genspec
from .graph import Graph, GraphError, build_graph, prune_unreachable_roots
from .heap import EmptyHeapError, IndexedHeap, KeyIncreaseError
from .metrics import Metrics, RunResult
from .oracle import (ComparisonReport, DistMismatchError,
                     bellman_ford_oracle, check_optimality, compare_runs)
from .sp1 import run_sp1
from .sp2 import run_sp2
from .sp3 import compute_out_weights, run_sp3
from .sp4 import run_sp4

__version__ = "0.1.0"

__all__ = [
    "INF", "U64_MAX", "CostOverflowError", "cost_add",
    "InvariantViolation", "run_dijkstra",
    "parse_dimacs", "serialize_dimacs",
    "GenSpec", "generate", "parse_genspec",
    "Graph", "GraphError", "build_graph", "prune_unreachable_roots",
    "EmptyHeapError", "IndexedHeap", "KeyIncreaseError",
    "Metrics", "RunResult",
    "ComparisonReport", "DistMismatchError", "bellman_ford_oracle",
    "check_optimality", "compare_runs",
    "run_sp1", "run_sp2", "compute_out_weights", "run_sp3", "run_sp4",
]
