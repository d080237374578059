"""Run instrumentation shared by all solvers."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Metrics:
    heap_inserts: int = 0
    heap_adjusts: int = 0
    heap_remove_mins: int = 0
    relaxations: int = 0
    outer_iterations: int = 0
    frontier_sizes: list = field(default_factory=list)
    rounds: int = 0
    wall_time: float = 0.0
    # How often the raw heap minimum overstated the crossing bound and
    # the pending-queue / current-vertex refinement tightened it.
    crossing_bound_tightened: int = 0

    @property
    def total_heap_ops(self) -> int:
        return self.heap_inserts + self.heap_adjusts + self.heap_remove_mins

    @property
    def max_frontier(self) -> int:
        return max(self.frontier_sizes, default=0)

    def as_dict(self) -> dict:
        return {
            "heap_inserts": self.heap_inserts,
            "heap_adjusts": self.heap_adjusts,
            "heap_remove_mins": self.heap_remove_mins,
            "heap_ops_total": self.total_heap_ops,
            "relaxations": self.relaxations,
            "outer_iterations": self.outer_iterations,
            "frontier_sizes": list(self.frontier_sizes),
            "max_frontier": self.max_frontier,
            "rounds": self.rounds,
            "wall_time": self.wall_time,
        }


@dataclass
class RunResult:
    """Final distances plus instrumentation for one solver run."""

    dist: list
    metrics: Metrics
    fixed_at_iteration: list      # per-vertex iteration index, None = never
    algorithm: str = ""
    round_trace: list | None = None   # SP4 per-round (D, C, fixed) snapshots
    in_weight: list | None = None     # SP2 per-vertex discovery in-weights

    def reachable_count(self) -> int:
        return sum(1 for it in self.fixed_at_iteration if it is not None)
