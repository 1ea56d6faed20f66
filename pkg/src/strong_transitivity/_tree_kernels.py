"""Compiled inner loops of the tree solver.

Per vertex ``x`` only *qualified* neighbours matter (``deg(u) >= deg(x)``,
whole-tree degrees).  Their values are clamped to ``q + 1`` (``q`` = number
of qualified entries) and counting-sorted, which keeps each vertex at
``O(deg(x))``: a value above ``q + 1`` can never block the greedy chain.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def greedy_count(values, q):
    """Chain count over ascending ``values[:q]``: ``c += 1`` whenever ``value >= c``."""
    c = 1
    for t in range(q):
        if values[t] >= c:
            c += 1
    return c


@njit(cache=True)
def mark_flags(z, values, q, flags):
    """Required flags for ascending ``values[:q]`` given chain count ``z``.

    Returns False when ``z`` cannot come from these values.
    """
    if z - 1 > q or z < 1:
        return False
    if q == z - 1:
        for t in range(q):
            flags[t] = 1
        return True
    s = q - z + 1
    for t in range(s):
        flags[t] = 0
    t = s + 1  # 1-based position
    while t <= q:
        if values[t - 2] >= t - s:
            flags[t - 1] = 0
            t += 1
        else:
            break
    while t <= q:
        flags[t - 1] = 1
        t += 1
    return True


@njit(cache=True)
def _counting_sort(raw_vals, raw_own, q, counts, out_vals, out_own):
    # values clamped to 1..q+1; stable, so ties keep the input (vertex id) order
    for b in range(q + 2):
        counts[b] = 0
    for t in range(q):
        v = raw_vals[t]
        if v > q + 1:
            v = q + 1
        raw_vals[t] = v
        counts[v] += 1
    run = 0
    for b in range(q + 2):
        c = counts[b]
        counts[b] = run
        run += c
    for t in range(q):
        v = raw_vals[t]
        pos = counts[v]
        out_vals[pos] = v
        out_own[pos] = raw_own[t]
        counts[v] = pos + 1


@njit(cache=True)
def bottom_up_kernel(indptr, indices, deg, order, parent):
    """Modified rooted numbers for every vertex, processing ``order`` reversed."""
    n = deg.shape[0]
    width = 2
    for v in range(n):
        if deg[v] + 2 > width:
            width = deg[v] + 2
    raw_vals = np.empty(width, np.int64)
    raw_own = np.empty(width, np.int64)
    out_vals = np.empty(width, np.int64)
    out_own = np.empty(width, np.int64)
    counts = np.empty(width + 1, np.int64)
    mstr = np.ones(n, np.int64)
    for idx in range(n - 1, -1, -1):
        x = order[idx]
        q = 0
        for e in range(indptr[x], indptr[x + 1]):
            u = indices[e]
            if u != parent[x] and deg[u] >= deg[x]:
                raw_vals[q] = mstr[u]
                raw_own[q] = u
                q += 1
        if q == 0:
            mstr[x] = 1
            continue
        _counting_sort(raw_vals, raw_own, q, counts, out_vals, out_own)
        mstr[x] = greedy_count(out_vals, q)
    return mstr


@njit(cache=True)
def top_down_kernel(indptr, indices, deg, order, parent, mstr):
    """Strong transitive number of every vertex by rerooting along ``order``.

    Returns ``(st, required, parent_value)`` where ``parent_value[x]`` is the
    modified rooted number of ``parent[x]`` in the tree rooted at ``x``
    (``st(parent) - required(x)``), and ``required[x]`` is relative to the
    parent's full neighbourhood.
    """
    n = deg.shape[0]
    width = 2
    for v in range(n):
        if deg[v] + 2 > width:
            width = deg[v] + 2
    raw_vals = np.empty(width, np.int64)
    raw_own = np.empty(width, np.int64)
    out_vals = np.empty(width, np.int64)
    out_own = np.empty(width, np.int64)
    counts = np.empty(width + 1, np.int64)
    flags = np.empty(width, np.int64)
    st = np.zeros(n, np.int64)
    required = np.zeros(n, np.int64)
    parent_value = np.zeros(n, np.int64)
    for idx in range(n):
        x = order[idx]
        p = parent[x]
        if p >= 0:
            parent_value[x] = st[p] - required[x]
        q = 0
        for e in range(indptr[x], indptr[x + 1]):
            u = indices[e]
            if deg[u] >= deg[x]:
                raw_vals[q] = parent_value[x] if u == p else mstr[u]
                raw_own[q] = u
                q += 1
        if q == 0:
            st[x] = 1
            continue
        _counting_sort(raw_vals, raw_own, q, counts, out_vals, out_own)
        z = greedy_count(out_vals, q)
        st[x] = z
        mark_flags(z, out_vals, q, flags)
        for t in range(q):
            u = out_own[t]
            if u != p:
                required[u] = flags[t]
    return st, required, parent_value


@njit(cache=True)
def bfs_relabel(indptr, indices, deg, root):
    """Breadth-first search from ``root`` that also copies the graph with the
    ``i``-th visited vertex renamed ``i``.

    In the new labelling every vertex's children are consecutive, so the DP
    passes walk memory almost sequentially.  Returns ``reached`` (the number
    of visited vertices); the other outputs are only meaningful when it
    equals ``n``.
    """
    n = deg.shape[0]
    order = np.empty(n, np.int64)
    parent = np.full(n, -1, np.int64)
    rank = np.full(n, -1, np.int64)
    new_indptr = np.empty(n + 1, np.int64)
    new_indices = np.empty(indices.shape[0], np.int64)
    new_deg = np.empty(n, np.int64)
    new_parent = np.empty(n, np.int64)
    order[0] = root
    rank[root] = 0
    tail = 1
    new_indptr[0] = 0
    pos = 0
    for i in range(n):
        if i == tail:
            return i, order, parent, new_indptr, new_indices, new_deg, new_parent
        x = order[i]
        new_deg[i] = deg[x]
        new_parent[i] = -1 if parent[x] < 0 else rank[parent[x]]
        for e in range(indptr[x], indptr[x + 1]):
            u = indices[e]
            if rank[u] < 0:
                rank[u] = tail
                order[tail] = u
                parent[u] = x
                tail += 1
            new_indices[pos] = rank[u]
            pos += 1
        new_indptr[i + 1] = pos
    return n, order, parent, new_indptr, new_indices, new_deg, new_parent
