"""Shared fixtures: the five-vertex reference graph used across tests."""

import pytest

from sssp import build_graph

G5_EDGES = [
    (0, 1, 9), (0, 2, 2), (1, 3, 3), (1, 4, 2),
    (2, 3, 6), (2, 4, 5), (4, 3, 8), (3, 2, 1),
]
G5_DIST = [0, 9, 2, 8, 7]


@pytest.fixture
def g5():
    return build_graph(5, G5_EDGES)
