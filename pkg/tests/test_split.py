import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from strong_transitivity.generators import gen_complete, gen_cycle, gen_random_graph, gen_random_split
from strong_transitivity.graph import GraphError, build_graph, is_connected
from strong_transitivity.oracle import brute_tr, brute_tr_st, max_clique_size
from strong_transitivity.split import SplitDecomposition, recognize_split, solve_split, tr_st_split
from strong_transitivity.verify import verify_strong_transitive

from oracles import clique_with_private_neighbours, is_split_bruteforce

K3_PENDANT = build_graph(4, [(0, 1), (1, 2), (0, 2), (0, 3)])


def test_recognize_examples():
    d = recognize_split(K3_PENDANT)
    assert d.clique == {0, 1, 2} and d.independent == {3}
    assert recognize_split(gen_cycle(4)) is None
    d = recognize_split(gen_complete(4))
    assert d.clique == {0, 1, 2, 3} and not d.independent


def test_tr_st_split_examples():
    k, w = solve_split(K3_PENDANT)
    assert k == 3 == brute_tr_st(K3_PENDANT)[0] and verify_strong_transitive(K3_PENDANT, w).valid
    assert solve_split(gen_complete(4))[0] == 4 == brute_tr_st(gen_complete(4))[0]
    assert solve_split(build_graph(1, []))[0] == 1


def test_witness_shape():
    k, w = solve_split(K3_PENDANT)
    # vertex 0 has the highest degree and stays in V_1 with the pendant
    assert w.as_lists() == [[0, 3], [1], [2]]


def test_invalid_decomposition_rejected():
    bad = SplitDecomposition(frozenset({0, 3}), frozenset({1, 2}))
    with pytest.raises(GraphError):
        tr_st_split(K3_PENDANT, bad)


@settings(max_examples=400, deadline=None)
@given(st.integers(1, 8), st.floats(0.0, 1.0), st.integers(0, 10**6))
def test_recognition_matches_bipartition_search(n, p, seed):
    g = gen_random_graph(n, p, seed)
    d = recognize_split(g)
    assert (d is not None) == is_split_bruteforce(g)
    if d is not None:
        assert d.omega == max_clique_size(g)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 10), st.integers(0, 10**6), st.floats(0.0, 1.0))
def test_generated_split_clique_is_maximum(n, seed, p):
    g = gen_random_split(n, seed, p=p)
    d = recognize_split(g)
    assert d is not None and d.omega == max_clique_size(g)
    k, w = tr_st_split(g, d)
    assert k == d.omega and w.k == k and verify_strong_transitive(g, w).valid


def connected_split(n, seed):
    while True:
        g = gen_random_split(n, seed, p=0.6)
        if is_connected(g):
            return g
        seed += 10**6


@pytest.mark.parametrize("seed", range(40))
def test_connected_split_matches_oracle(seed):
    g = connected_split(4 + seed % 8, seed)
    k, w = solve_split(g)
    assert k == brute_tr_st(g)[0] and verify_strong_transitive(g, w).valid


@pytest.mark.parametrize("t,extra,seed", [(2, 0, 0), (3, 1, 1), (3, 3, 2), (4, 2, 3), (4, 4, 5), (5, 1, 4), (6, 0, 6)])
def test_private_neighbour_family(t, extra, seed):
    g = clique_with_private_neighbours(t, extra, seed)
    k, _ = solve_split(g)
    assert k == t == brute_tr_st(g)[0]
    assert brute_tr(g) == t + 1
