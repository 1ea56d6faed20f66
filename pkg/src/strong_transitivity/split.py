"""Split graphs: recognition from the degree sequence and ``Tr_st = omega``.

With degrees sorted ``d_1 >= ... >= d_n`` and ``m = max{i : d_i >= i - 1}``,
a graph is split iff

    d_1 + ... + d_m == m (m - 1) + d_{m+1} + ... + d_n

and then the ``m`` highest-degree vertices form a maximum clique ``K`` and
the rest an independent set ``S``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .graph import Graph, GraphError
from .partition import VertexPartition


class SplitVerificationError(RuntimeError):
    """A degree-sequence certificate failed its explicit re-check (a bug, not bad input)."""


@dataclass(frozen=True)
class SplitDecomposition:
    clique: frozenset
    independent: frozenset

    @property
    def omega(self) -> int:
        return len(self.clique)


def _mask(n: int, members) -> np.ndarray:
    mask = np.zeros(n, dtype=bool)
    mask[np.fromiter(members, dtype=np.int64, count=len(members))] = True
    return mask


def check_decomposition(g: Graph, d: SplitDecomposition) -> Optional[str]:
    """Return a description of the first defect of ``d`` on ``g``, or None."""
    if d.clique & d.independent:
        return f"vertex {min(d.clique & d.independent)} is on both sides"
    if len(d.clique) + len(d.independent) != g.n:
        return "sides do not cover the vertex set"
    in_k = _mask(g.n, d.clique)
    src = np.repeat(np.arange(g.n), g.degrees)
    dst = g.indices
    inside = np.bincount(src[in_k[src] & in_k[dst]], minlength=g.n)
    short = np.flatnonzero(in_k & (inside != len(d.clique) - 1))
    if short.size:
        return f"clique vertex {int(short[0])} misses another clique vertex"
    both_s = ~in_k[src] & ~in_k[dst]
    if both_s.any():
        i = int(np.argmax(both_s))
        return f"edge ({int(src[i])}, {int(dst[i])}) inside the independent side"
    return None


def recognize_split(g: Graph) -> Optional[SplitDecomposition]:
    """Split decomposition with a maximum clique, or None if ``g`` is not split."""
    if g.n == 0:
        return None
    deg = g.degrees
    # descending degree, ties by vertex id; a stable sort on a small unsigned
    # key is a radix sort in numpy, so this stays linear
    key = int(deg.max()) - deg
    order = np.argsort(key.astype(np.uint16) if key.max() < 2**16 else key, kind="stable")
    d = deg[order]
    idx = np.arange(1, g.n + 1)
    m = int(np.flatnonzero(d >= idx - 1).max()) + 1
    if int(d[:m].sum()) != m * (m - 1) + int(d[m:].sum()):
        return None
    dec = SplitDecomposition(frozenset(order[:m].tolist()), frozenset(order[m:].tolist()))
    problem = check_decomposition(g, dec)
    if problem is not None:
        raise SplitVerificationError(f"degree-sequence test passed but {problem}")
    return dec


def tr_st_split(g: Graph, d: SplitDecomposition) -> tuple[int, VertexPartition]:
    """``Tr_st = |K|`` and the witness with singleton classes along the clique.

    The clique is ordered by non-increasing degree (ties by id) as
    ``v_1..v_t``; ``V_i = {v_i}`` for ``i >= 2`` and ``V_1`` takes the rest.
    """
    problem = check_decomposition(g, d)
    if problem is not None:
        raise GraphError(f"invalid split decomposition: {problem}")
    deg = g.degrees
    ranked = sorted(d.clique, key=lambda v: (-int(deg[v]), v))
    labels = np.ones(g.n, dtype=np.int64)
    for i, v in enumerate(ranked[1:], 2):
        labels[v] = i
    return len(ranked), VertexPartition.from_labels(labels)


def solve_split(g: Graph) -> Optional[tuple[int, VertexPartition]]:
    d = recognize_split(g)
    return None if d is None else tr_st_split(g, d)
