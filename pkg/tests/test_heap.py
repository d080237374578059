"""Differential tests for IndexedHeap against a naive dict model."""

import heapq

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sssp import EmptyHeapError, IndexedHeap, KeyIncreaseError
from sssp.costs import INF


def make(n):
    fixed = [False] * n
    return IndexedHeap(n, fixed), fixed


def test_insert_and_remove_min_orders_by_key():
    h, _ = make(4)
    for v, k in [(0, 5), (1, 2), (2, 9), (3, 2)]:
        h.insert_or_adjust(v, k)
    # Ties broken by vertex id via tuple comparison.
    assert [h.remove_min() for _ in range(4)] == [
        (1, 2), (3, 2), (0, 5), (2, 9)]


def test_decrease_key_moves_vertex_up():
    h, _ = make(3)
    h.insert_or_adjust(0, 10)
    h.insert_or_adjust(1, 5)
    h.insert_or_adjust(0, 1)
    assert h.key_of(0) == 1
    assert h.remove_min() == (0, 1)


def test_key_increase_rejected():
    h, _ = make(2)
    h.insert_or_adjust(0, 3)
    with pytest.raises(KeyIncreaseError):
        h.insert_or_adjust(0, 4)
    h.insert_or_adjust(0, 3)      # equal key is a no-op, not an error


def test_remove_min_on_empty_raises():
    h, _ = make(1)
    with pytest.raises(EmptyHeapError):
        h.remove_min()


def test_contains_and_key_of():
    h, _ = make(3)
    h.insert_or_adjust(2, 7)
    assert 2 in h and 0 not in h
    assert h.key_of(2) == 7
    with pytest.raises(KeyError):
        h.key_of(0)


def test_virtual_removal_via_fixed():
    h, fixed = make(4)
    for v, k in [(0, 1), (1, 2), (2, 3)]:
        h.insert_or_adjust(v, k)
    fixed[0] = True
    h.on_fixed(0)
    assert not h.is_effectively_empty
    # get_min_nonfixed discards the fixed root and reports the next key.
    assert h.get_min_nonfixed() == 2
    assert 0 not in h
    fixed[1] = fixed[2] = True
    h.on_fixed(1)
    h.on_fixed(2)
    assert h.is_effectively_empty
    assert h.get_min_nonfixed() == INF


def test_peek_root_key_has_no_side_effects():
    h, fixed = make(2)
    h.insert_or_adjust(0, 4)
    fixed[0] = True
    h.on_fixed(0)
    assert h.peek_root_key() == 4     # still the fixed entry
    assert len(h) == 1


def test_nonfixed_entries_snapshot():
    h, fixed = make(3)
    for v, k in [(0, 1), (1, 2), (2, 3)]:
        h.insert_or_adjust(v, k)
    fixed[1] = True
    h.on_fixed(1)
    assert sorted(h.nonfixed_entries()) == [(1, 0), (3, 2)]


ops = st.lists(
    st.one_of(
        st.tuples(st.just("insert"), st.integers(0, 15), st.integers(0, 100)),
        st.tuples(st.just("pop"), st.just(0), st.just(0)),
        st.tuples(st.just("fix"), st.integers(0, 15), st.just(0)),
    ),
    max_size=120,
)


@settings(max_examples=300, deadline=None)
@given(ops)
def test_differential_against_model(seq):
    n = 16
    h, fixed = make(n)
    model = {}                        # vertex -> key, only live entries
    for op, v, k in seq:
        if op == "insert":
            if v in model and k > model[v]:
                with pytest.raises(KeyIncreaseError):
                    h.insert_or_adjust(v, k)
            else:
                h.insert_or_adjust(v, k)
                model[v] = k
        elif op == "pop":
            if model:
                want = min((key, u) for u, key in model.items())
                assert h.remove_min() == (want[1], want[0])
                del model[want[1]]
            else:
                with pytest.raises(EmptyHeapError):
                    h.remove_min()
        else:                         # fix
            if not fixed[v]:
                fixed[v] = True
                h.on_fixed(v)
        h.check_invariants()
        live = {u: key for u, key in model.items() if not fixed[u]}
        assert h.is_effectively_empty == (not live)
        if live:
            assert h.get_min_nonfixed() == min(
                (key, u) for u, key in live.items())[0]
        else:
            assert h.get_min_nonfixed() == INF
        # get_min_nonfixed may discard fixed roots; mirror in the model.
        model = {u: key for u, key in model.items() if u in h}


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(0, 1000), min_size=1, max_size=64))
def test_heapsort_matches_stdlib(keys):
    h, _ = make(len(keys))
    for v, k in enumerate(keys):
        h.insert_or_adjust(v, k)
    got = [h.remove_min()[0] for _ in range(len(keys))]
    want = [v for _k, v in heapq.nsmallest(len(keys),
                                           [(k, v) for v, k in enumerate(keys)])]
    assert got == want
