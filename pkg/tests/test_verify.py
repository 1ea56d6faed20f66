import time

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from strong_transitivity.generators import gen_complete, gen_path, gen_random_connected_graph, gen_random_graph
from strong_transitivity.oracle import brute_tr_st
from strong_transitivity.partition import PartitionError, VertexPartition
from strong_transitivity.verify import (
    Violation,
    dominates,
    strongly_dominates,
    verify_strong_transitive,
    verify_transitive,
)

from oracles import is_strong_transitive

# P_3 as a-b-c
A, B, C = 0, 1, 2
P3 = gen_path(3)


def test_strongly_dominates_examples():
    assert strongly_dominates(P3, {B}, {A})
    assert not strongly_dominates(P3, {A}, {B})
    assert strongly_dominates(P3, {A}, set())


def test_overlap_rejected():
    with pytest.raises(ValueError):
        strongly_dominates(P3, {A, B}, {B})
    with pytest.raises(ValueError):
        dominates(P3, {A}, {A})


def test_strong_examples():
    assert verify_strong_transitive(P3, VertexPartition.from_classes([[B, C], [A]])).valid
    v = verify_strong_transitive(P3, VertexPartition.from_classes([[A, C], [B]]))
    assert not v.valid and v.violation == Violation(1, 2, B)
    assert verify_strong_transitive(gen_complete(5), VertexPartition.from_classes([range(5)])).valid


def test_plain_examples():
    assert verify_transitive(P3, VertexPartition.from_classes([[A, C], [B]])).valid
    assert verify_transitive(P3, VertexPartition.from_classes([[B, C], [A]])).valid
    assert verify_transitive(gen_complete(2), VertexPartition.from_classes([[0], [1]])).valid


def test_violation_is_lexicographically_first():
    # path 0-1-2-3-4 with classes chosen so several obligations fail
    g = gen_path(5)
    p = VertexPartition.from_labels([3, 1, 3, 2, 1])
    v = verify_strong_transitive(g, p)
    assert v.violation == Violation(1, 2, 3)
    assert v.violation.describe() == "class 1 fails to strongly dominate vertex 3 in class 2"


def test_structural_errors_are_distinct():
    with pytest.raises(PartitionError):
        verify_strong_transitive(P3, VertexPartition.from_classes([[0], [1]]))
    with pytest.raises(PartitionError):
        VertexPartition.from_classes([[0, 1], [], [2]])
    with pytest.raises(PartitionError):
        VertexPartition.from_classes([[0, 1], [1, 2]])


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 8), st.floats(0.1, 1.0), st.integers(0, 10**6), st.data())
def test_matches_definition_and_strong_implies_plain(n, p, seed, data):
    g = gen_random_graph(n, p, seed)
    raw = data.draw(st.lists(st.integers(1, 4), min_size=n, max_size=n))
    used = {c: i + 1 for i, c in enumerate(sorted(set(raw)))}
    labels = [used[c] for c in raw]
    part = VertexPartition.from_labels(labels)
    strong = verify_strong_transitive(g, part).valid
    plain = verify_transitive(g, part).valid
    assert strong == is_strong_transitive(g.adjacency, g.degrees.tolist(), labels, True)
    assert plain == is_strong_transitive(g.adjacency, g.degrees.tolist(), labels, False)
    if strong:
        assert plain


@pytest.mark.parametrize("seed", range(40))
def test_merge_down_keeps_validity(seed):
    g = gen_random_connected_graph(8, 0.4, seed)
    k, part = brute_tr_st(g)
    while part.k > 1:
        part = part.merge_lowest()
        assert verify_strong_transitive(g, part).valid


def test_verify_speed():
    rng = np.random.default_rng(0)
    graphs = [gen_random_graph(50, 0.1, s) for s in range(10)]
    parts = [VertexPartition.from_labels(np.concatenate([np.arange(1, 6), rng.integers(1, 6, 45)])) for _ in range(100)]
    t0 = time.perf_counter()
    for g in graphs:
        for part in parts:
            verify_strong_transitive(g, part)
    assert time.perf_counter() - t0 < 1.0
