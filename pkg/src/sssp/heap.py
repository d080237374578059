"""Addressable binary min-heap with lazy removal of fixed vertices.

Entries are (key, vertex) with ties broken by the smaller vertex id, so
every solver built on it is deterministic.  The heap shares the owning
solver's `fixed` array: fixed vertices stay in the array until they
surface at the root ("virtual removal"), but a live count of non-fixed
entries lets emptiness be answered without draining them.
"""

from __future__ import annotations

from .costs import INF
from .metrics import Metrics


class EmptyHeapError(IndexError):
    """remove_min on a physically empty heap."""


class KeyIncreaseError(ValueError):
    """insert_or_adjust tried to increase a key; keys may only decrease."""

    def __init__(self, vertex, old, new):
        super().__init__(f"key increase for vertex {vertex}: {old} -> {new}")
        self.vertex = vertex


class IndexedHeap:
    __slots__ = ("_entries", "_pos", "_fixed", "_metrics", "nonfixed_count")

    def __init__(self, n: int, fixed, metrics: Metrics | None = None):
        self._entries = []            # list of (key, vertex), heap ordered
        self._pos = [-1] * n          # vertex -> index, -1 when absent
        self._fixed = fixed           # shared with the owning solver
        self._metrics = metrics if metrics is not None else Metrics()
        self.nonfixed_count = 0

    def __len__(self):
        return len(self._entries)

    def __contains__(self, v):
        return self._pos[v] >= 0

    def key_of(self, v):
        i = self._pos[v]
        if i < 0:
            raise KeyError(v)
        return self._entries[i][0]

    @property
    def is_effectively_empty(self) -> bool:
        return self.nonfixed_count == 0

    def insert_or_adjust(self, v: int, key) -> None:
        i = self._pos[v]
        if i >= 0:
            old = self._entries[i][0]
            if key > old:
                raise KeyIncreaseError(v, old, key)
            self._metrics.heap_adjusts += 1
            if key != old:
                self._entries[i] = (key, v)
                self._sift_up(i)
        else:
            self._metrics.heap_inserts += 1
            self._entries.append((key, v))
            i = len(self._entries) - 1
            self._pos[v] = i
            self._sift_up(i)
            if not self._fixed[v]:
                self.nonfixed_count += 1

    def remove_min(self):
        """Pop the root entry (fixed or not); returns (vertex, key)."""
        if not self._entries:
            raise EmptyHeapError("remove_min on empty heap")
        self._metrics.heap_remove_mins += 1
        key, v = self._pop_root()
        if not self._fixed[v]:
            self.nonfixed_count -= 1
        return v, key

    def get_min_nonfixed(self):
        """Key of the cheapest non-fixed entry, or INF.

        Fixed entries encountered at the root are physically discarded
        (counted as remove_mins: they are real heap work).
        """
        while self._entries and self._fixed[self._entries[0][1]]:
            self._metrics.heap_remove_mins += 1
            self._pop_root()
        if not self._entries:
            return INF
        return self._entries[0][0]

    def peek_root_key(self):
        """Physical root key (possibly of a fixed entry); no side effects."""
        return self._entries[0][0] if self._entries else INF

    def nonfixed_entries(self):
        """Snapshot of (key, vertex) for non-fixed entries; no side effects."""
        return [e for e in self._entries if not self._fixed[e[1]]]

    def on_fixed(self, v: int) -> None:
        """Notify that v was just marked fixed; keeps the live count exact."""
        if self._pos[v] >= 0:
            self.nonfixed_count -= 1

    # -- internals ---------------------------------------------------------

    def _pop_root(self):
        entries = self._entries
        root = entries[0]
        self._pos[root[1]] = -1
        last = entries.pop()
        if entries:
            entries[0] = last
            self._pos[last[1]] = 0
            self._sift_down(0)
        return root

    def _sift_up(self, i):
        entries = self._entries
        pos = self._pos
        item = entries[i]
        while i > 0:
            parent = (i - 1) >> 1
            p = entries[parent]
            if p <= item:
                break
            entries[i] = p
            pos[p[1]] = i
            i = parent
        entries[i] = item
        pos[item[1]] = i

    def _sift_down(self, i):
        entries = self._entries
        pos = self._pos
        size = len(entries)
        item = entries[i]
        while True:
            child = 2 * i + 1
            if child >= size:
                break
            right = child + 1
            if right < size and entries[right] < entries[child]:
                child = right
            if item <= entries[child]:
                break
            entries[i] = entries[child]
            pos[entries[child][1]] = i
            i = child
        entries[i] = item
        pos[item[1]] = i

    def check_invariants(self) -> None:
        """Full-scan consistency check; debug use only."""
        entries = self._entries
        for i, (key, v) in enumerate(entries):
            assert self._pos[v] == i, f"position map broken for {v}"
            parent = (i - 1) >> 1
            if i > 0:
                assert entries[parent] <= (key, v), f"heap order broken at {i}"
        claimed = sum(1 for _k, v in entries if not self._fixed[v])
        assert claimed == self.nonfixed_count, (
            f"nonfixed_count {self.nonfixed_count} != actual {claimed}")
