"""DIMACS shortest-path (.gr) reader and writer.

Format: comment lines ``c ...``, a single problem line ``p sp <n> <m>``,
and arc lines ``a <u> <v> <w>`` with 1-indexed vertices.  Parsing
remaps to 0-indexed vertices and applies full graph validation.
"""

from __future__ import annotations

from .graph import Graph, GraphError, build_graph


class DimacsError(GraphError):
    """Base class for DIMACS format errors."""


class MalformedLineError(DimacsError):
    def __init__(self, lineno, line):
        super().__init__(f"malformed line {lineno}: {line!r}")
        self.lineno = lineno


class MissingProblemLineError(DimacsError):
    def __init__(self):
        super().__init__("missing 'p sp <n> <m>' problem line")


class ArcCountMismatchError(DimacsError):
    def __init__(self, declared, actual):
        super().__init__(f"problem line declares {declared} arcs, found {actual}")
        self.declared = declared
        self.actual = actual


def parse_dimacs(text, source: int = 0) -> Graph:
    """Parse DIMACS .gr text (str or bytes) into a validated Graph."""
    if isinstance(text, bytes):
        text = text.decode("ascii")
    n = None
    declared_m = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None or len(parts) != 4 or parts[1] != "sp":
                raise MalformedLineError(lineno, raw)
            try:
                n = int(parts[2])
                declared_m = int(parts[3])
            except ValueError:
                raise MalformedLineError(lineno, raw) from None
            if n < 0 or declared_m < 0:
                raise MalformedLineError(lineno, raw)
        elif parts[0] == "a":
            if n is None:
                raise MissingProblemLineError()
            if len(parts) != 4:
                raise MalformedLineError(lineno, raw)
            try:
                u, v, w = int(parts[1]), int(parts[2]), int(parts[3])
            except ValueError:
                raise MalformedLineError(lineno, raw) from None
            edges.append((u - 1, v - 1, w))
        else:
            raise MalformedLineError(lineno, raw)
    if n is None:
        raise MissingProblemLineError()
    if len(edges) != declared_m:
        raise ArcCountMismatchError(declared_m, len(edges))
    return build_graph(n, edges, source)


def serialize_dimacs(g: Graph, comment: str | None = None) -> str:
    """Emit .gr text for a Graph, 1-indexed, round-trippable."""
    lines = []
    if comment:
        for part in comment.splitlines():
            lines.append(f"c {part}")
    lines.append(f"p sp {g.n} {g.m}")
    for u, v, w in g.edges:
        lines.append(f"a {u + 1} {v + 1} {w}")
    return "\n".join(lines) + "\n"
