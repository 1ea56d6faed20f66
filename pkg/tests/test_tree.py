import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from strong_transitivity.generators import gen_cycle, gen_path, gen_random_tree, gen_star
from strong_transitivity.graph import build_graph
from strong_transitivity.oracle import brute_st_number, brute_st_numbers, brute_tr_st
from strong_transitivity.tree import (
    NotATreeError,
    bottom_up,
    mark_required,
    qualified_values,
    solve_tree,
    strong_transitive_number,
    tr_st_tree,
    witness_partition_tree,
)
from strong_transitivity.verify import verify_strong_transitive

from oracles import prune_branch, tree_family


def fan_tree(child_values):
    """Root 0 with one qualified child per entry; a child of value 1 carries two
    leaves, a child of value 2 carries a value-1 grandchild (itself with two
    leaves) and one leaf.  Every internal vertex has degree 3 or more."""
    edges, nxt = [], 1

    def leaf(parent):
        nonlocal nxt
        edges.append((parent, nxt))
        nxt += 1
        return nxt - 1

    def hang(parent, value):
        c = leaf(parent)
        if value == 1:
            leaf(c), leaf(c)
        else:
            hang(c, value - 1)
            leaf(c)
        return c

    children = [hang(0, v) for v in child_values]
    return build_graph(nxt, edges), children


def test_qualified_values_examples():
    star = gen_star(5)
    assert len(qualified_values(star, 0, {u: 1 for u in range(1, 5)})) == 0
    p6 = gen_path(6)
    q = qualified_values(p6, 2, {1: 2, 3: 1})
    assert q.values == (1, 2) and q.owners == (3, 1)
    q = qualified_values(p6, 1, {0: 1, 2: 2})
    assert q.owners == (2,)


def test_strong_transitive_number_examples():
    assert strong_transitive_number([]) == 1
    assert strong_transitive_number([1]) == 2
    assert strong_transitive_number([1, 1, 2]) == 3
    assert strong_transitive_number([1, 1, 1]) == 2
    assert strong_transitive_number([5, 5, 5]) == 4
    with pytest.raises(ValueError):
        strong_transitive_number([2, 1])


def test_fan_tree_realises_1_1_2():
    g, kids = fan_tree([1, 1, 2])
    mstr = bottom_up(g, 0).mstr
    assert [int(mstr[c]) for c in kids] == [1, 1, 2]
    assert brute_st_number(g, 0) == 3 == strong_transitive_number([1, 1, 2])


def _delete_one(values):
    g, kids = fan_tree(values)
    deg = [int(d) for d in g.degrees]
    before = brute_st_number(g, 0)
    flags = []
    for c in kids:
        sub, keep, old_deg = prune_branch(g, 0, c)
        after = brute_st_number(sub, keep.index(0), degrees=old_deg)
        assert after in (before, before - 1)
        flags.append(int(after == before - 1))
    return before, flags


def test_mark_required_examples():
    assert mark_required(3, [1, 2]) == [1, 1]
    assert mark_required(2, [1, 1, 1]) == [0, 0, 0]
    assert mark_required(3, [1, 1, 2]) == [0, 0, 1]
    assert _delete_one([1, 1, 1]) == (2, [0, 0, 0])
    assert _delete_one([1, 1, 2]) == (3, [0, 0, 1])
    assert _delete_one([1, 2]) == (3, [1, 1])
    with pytest.raises(ValueError):
        mark_required(4, [1, 1])


@settings(max_examples=300, deadline=None)
@given(st.lists(st.integers(1, 6), max_size=8))
def test_mark_required_matches_recount(values):
    values = sorted(values)
    z = strong_transitive_number(values)
    flags = mark_required(z, values)
    for t in range(len(values)):
        rest = values[:t] + values[t + 1:]
        assert flags[t] == int(strong_transitive_number(rest) == z - 1)


def test_bottom_up_examples():
    p6 = gen_path(6)
    t = bottom_up(p6, 0)
    assert t.mstr[::-1].tolist() == [1, 1, 2, 2, 2, 2]
    # each value is the subtree number with the degrees of the whole path
    for v in range(1, 6):
        sub, keep, old = prune_branch(p6, v, v - 1)
        assert t.mstr[v] == brute_st_number(sub, keep.index(v), degrees=old)
    assert bottom_up(gen_star(5), 0).mstr[0] == 1
    assert bottom_up(build_graph(1, []), 0).mstr.tolist() == [1]


def test_top_down_examples():
    assert solve_tree(gen_path(6)).st.tolist() == brute_st_numbers(gen_path(6)) == [2, 2, 3, 3, 2, 2]
    star = solve_tree(gen_star(5))
    assert star.st.tolist() == [1, 2, 2, 2, 2] and star.tr_st == 2
    assert solve_tree(gen_path(3)).st.tolist() == [2, 1, 2]


@pytest.mark.parametrize("n", range(6, 21))
def test_paths_have_three(n):
    k, w = tr_st_tree(gen_path(n))
    assert k == 3 and verify_strong_transitive(gen_path(n), w).valid


def test_small_paths():
    assert tr_st_tree(gen_path(3))[0] == 2
    assert tr_st_tree(build_graph(1, []))[0] == 1
    assert tr_st_tree(gen_path(2))[0] == 2


def test_witness_examples():
    p6 = gen_path(6)
    w = witness_partition_tree(p6, 2, 3)
    assert w.k == 3 and w.class_of(2) == 3 and verify_strong_transitive(p6, w).valid
    assert witness_partition_tree(p6, 4, 1).as_lists() == [list(range(6))]
    s = gen_star(5)
    w = witness_partition_tree(s, 1, 2)
    assert w.as_lists() == [[0, 2, 3, 4], [1]] and verify_strong_transitive(s, w).valid
    with pytest.raises(ValueError):
        witness_partition_tree(s, 0, 2)


def test_rejects_non_trees():
    with pytest.raises(NotATreeError):
        tr_st_tree(gen_cycle(4))
    with pytest.raises(NotATreeError, match="forest"):
        solve_tree(build_graph(4, [(0, 1), (2, 3)]))


@pytest.mark.parametrize("name,g", tree_family(8), ids=lambda x: x if isinstance(x, str) else "")
def test_family_matches_oracle(name, g):
    tables = solve_tree(g)
    assert tables.st.tolist() == brute_st_numbers(g)
    k, w = tr_st_tree(g)
    assert k == brute_tr_st(g)[0] and w.k == k and verify_strong_transitive(g, w).valid


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 12), st.integers(0, 10**6))
def test_random_trees_match_oracle(n, seed):
    g = gen_random_tree(n, seed)
    assert solve_tree(g).st.tolist() == brute_st_numbers(g)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 10), st.integers(0, 10**6))
def test_required_flags_match_branch_deletion(n, seed):
    g = gen_random_tree(n, seed)
    t = solve_tree(g)
    for c in range(n):
        y = int(t.parent[c])
        if y < 0:
            continue
        sub, keep, old = prune_branch(g, y, c)
        pruned = brute_st_number(sub, keep.index(y), degrees=old)
        assert pruned in (t.st[y], t.st[y] - 1)
        assert t.required[c] == t.st[y] - pruned
        assert t.parent_value[c] == pruned


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 3000), st.integers(0, 10**6), st.data())
def test_table_invariants(n, seed, data):
    g = gen_random_tree(n, seed)
    root = data.draw(st.integers(0, n - 1))
    t = solve_tree(g, root)
    deg = g.degrees
    assert np.all(t.mstr >= 1) and np.all(t.mstr <= deg + 1)
    assert np.all(t.st >= 1) and np.all(t.st <= deg + 1)
    assert t.st[root] == t.mstr[root]
    leaves = [v for v in range(n) if v != root and deg[v] == 1]
    assert all(t.mstr[v] == 1 for v in leaves)
    assert t.st.tolist() == solve_tree(g, 0).st.tolist()
    k, w = tr_st_tree(g)
    assert w.k == k == t.tr_st and verify_strong_transitive(g, w).valid
