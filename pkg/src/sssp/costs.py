"""Cost arithmetic for path weights.

Costs are non-negative integers bounded by the 64-bit unsigned range,
plus a distinguished INF sentinel for "unreachable / undiscovered".
All fixing rules in this package rely on exact integer equality
(C[x] == D[x]), so float distances are deliberately not supported.
"""

INF = float("inf")

U64_MAX = 2**64 - 1


class CostOverflowError(OverflowError):
    """A finite cost sum exceeded the 64-bit unsigned range."""


def cost_add(a, b):
    """Checked addition: INF absorbs, finite overflow raises."""
    if a == INF or b == INF:
        return INF
    s = a + b
    if s > U64_MAX:
        raise CostOverflowError(f"cost overflow: {a} + {b}")
    return s


def is_finite(x) -> bool:
    return x != INF
