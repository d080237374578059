from sssp import INF, bellman_ford_oracle, build_graph, run_dijkstra
from sssp.generators import gen_grid, gen_random

from conftest import G5_DIST


def test_reference_graph(g5):
    res = run_dijkstra(g5, debug=True)
    assert res.dist == G5_DIST
    assert res.algorithm == "dijkstra"


def test_reference_graph_metrics(g5):
    m = run_dijkstra(g5).metrics
    # One insert and one removal per reachable vertex: no decrease-key
    # on this graph ever re-inserts, and no stale entries remain.
    assert m.heap_inserts == 5
    assert m.heap_remove_mins == 5
    assert m.outer_iterations == 5


def test_fixed_order_is_by_distance(g5):
    res = run_dijkstra(g5)
    order = sorted(range(5), key=lambda v: res.fixed_at_iteration[v])
    assert [res.dist[v] for v in order] == sorted(res.dist)


def test_unreachable_stays_inf():
    g = build_graph(3, [(0, 1, 4)])
    res = run_dijkstra(g)
    assert res.dist == [0, 4, INF]
    assert res.fixed_at_iteration[2] is None
    assert res.reachable_count() == 2


def test_empty_and_singleton():
    assert run_dijkstra(build_graph(0, [])).dist == []
    assert run_dijkstra(build_graph(1, [])).dist == [0]


def test_nonzero_source(g5):
    res = run_dijkstra(g5, source=2)
    assert res.dist == [INF, INF, 0, 6, 5]


def test_matches_oracle_with_debug():
    for seed in range(20):
        g = gen_random(40, 150, wmax=30, seed=seed)
        oracle, _ = bellman_ford_oracle(g)
        assert run_dijkstra(g, debug=True).dist == oracle
    g = gen_grid(5, 5, wmax=9, seed=1)
    oracle, _ = bellman_ford_oracle(g)
    assert run_dijkstra(g, debug=True).dist == oracle
