"""Reduction from proper 3-colouring to strong transitivity on chordal graphs.

Given ``G`` with ``n`` vertices and ``m`` edges, the output ``G'`` contains

* a root ``v_i`` per original vertex, carrying a gadget tree whose root has
  ``m + 3 - deg_G(v_i)`` gadget children;
* a clique ``A = {e_1, ..., e_m, e}`` (one vertex per edge plus an apex);
* a root ``v_{e_j}`` per edge and three special roots ``v_a, v_e, v_b``,
  each carrying a gadget tree whose root has ``m + 2`` gadget children;
* edges ``e_j v_x``, ``e_j v_y``, ``e_j v_{e_j}`` for each edge ``e_j = v_x v_y``
  and ``e v_a``, ``e v_e``, ``e v_b``;

with target ``k = m + 4``.  Every root and every clique vertex ends up with
degree ``m + 3``.

Gadget tree for root degree ``d``: the root has two *heavy* children and
``d - 2`` leaves; each heavy vertex has one *anchor* child and ``m + 1``
leaves; each anchor has ``m + 2`` leaves.  Heavy and anchor vertices have
degree ``m + 3`` (counting the parent edge), so the root can sit in
``V_1`` (whole gadget in ``V_1``), ``V_2`` (dominated by a heavy vertex in
``V_1``) or ``V_3`` (heavy_1 in ``V_1``, heavy_2 in ``V_2`` dominated by its
anchor in ``V_1``), with every leaf in ``V_1``.

Vertex ids of ``G'``: originals ``0..n-1``, then ``e_1..e_m``, ``e``,
``v_{e_1}..v_{e_m}``, ``v_a, v_e, v_b``, then gadget internals root by root.
Edges of ``G`` are numbered in ascending ``(u, v)`` order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .graph import Graph, GraphError, build_graph, is_chordal, require_connected
from .partition import VertexPartition


class ReductionAuditError(RuntimeError):
    def __init__(self, invariant: str, detail: str):
        self.invariant = invariant
        super().__init__(f"instance audit failed [{invariant}]: {detail}")


class ColoringError(ValueError):
    pass


@dataclass(frozen=True)
class Provenance:
    kind: str  # original | edge_clique | apex | edge_root | special_root | gadget
    owner: object  # original vertex, edge index, special name, or owning root in G'
    role: Optional[str] = None  # heavy | anchor | leaf for gadget internals

    @property
    def tag(self) -> str:
        return f"gadget_{self.role}" if self.kind == "gadget" else self.kind


@dataclass(frozen=True)
class GadgetTree:
    root: int
    root_gadget_degree: int
    heavy: tuple[int, int]
    anchors: tuple[int, int]
    leaves: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    @property
    def internal(self) -> tuple[int, ...]:
        return self.heavy + self.anchors + self.leaves

    @property
    def size(self) -> int:
        return 1 + len(self.internal)

    def as_graph(self) -> Graph:
        """Stand-alone copy (only valid when ids are ``0..size-1``)."""
        return build_graph(self.size, self.edges)


def gadget_size(d: int, m: int) -> int:
    return 4 * m + d + 9


def build_gadget_tree(d: int, m: int, root: int = 0, start: Optional[int] = None) -> GadgetTree:
    """Gadget with root ``root``; internal vertices get ids ``start, start+1, ...``."""
    if d < 2:
        raise GraphError(f"gadget root degree must be at least 2 (two heavy children), got {d}")
    if m < 1:
        raise GraphError(f"edge count must be at least 1, got {m}")
    nxt = root + 1 if start is None else start
    ids = iter(range(nxt, nxt + gadget_size(d, m) - 1))
    h1, h2, a1, a2 = next(ids), next(ids), next(ids), next(ids)
    edges = [(root, h1), (root, h2), (h1, a1), (h2, a2)]
    leaves = []
    for parent, count in ((root, d - 2), (h1, m + 1), (h2, m + 1), (a1, m + 2), (a2, m + 2)):
        for _ in range(count):
            leaf = next(ids)
            leaves.append(leaf)
            edges.append((parent, leaf))
    return GadgetTree(root, d, (h1, h2), (a1, a2), tuple(leaves), tuple(edges))


@dataclass
class ReductionInstance:
    source: Graph
    gprime: Graph
    k: int
    source_edges: list[tuple[int, int]]
    original: list[int]
    edge_clique: list[int]
    apex: int
    edge_root: list[int]
    special: dict[str, int]
    gadgets: dict[int, GadgetTree]
    provenance: list[Provenance] = field(repr=False)

    @property
    def m(self) -> int:
        return len(self.source_edges)

    @property
    def clique(self) -> list[int]:
        return self.edge_clique + [self.apex]

    def roots(self) -> list[int]:
        return self.original + self.edge_root + [self.special[s] for s in "aeb"]


def reduce_3col_to_mstdp(g: Graph, allow_disconnected: bool = False) -> ReductionInstance:
    """Build and audit the chordal instance ``(G', k = m + 4)``."""
    if not allow_disconnected:
        require_connected(g)
    src_edges = g.edges()
    n, m = g.n, len(src_edges)
    if m < 1:
        raise GraphError("the reduction needs at least one edge")
    original = list(range(n))
    edge_clique = list(range(n, n + m))
    apex = n + m
    edge_root = list(range(n + m + 1, n + 2 * m + 1))
    special = {s: n + 2 * m + 1 + i for i, s in enumerate("aeb")}
    prov = [Provenance("original", i) for i in original]
    prov += [Provenance("edge_clique", j) for j in range(m)]
    prov.append(Provenance("apex", None))
    prov += [Provenance("edge_root", j) for j in range(m)]
    prov += [Provenance("special_root", s) for s in "aeb"]
    nxt = len(prov)

    edges: list[tuple[int, int]] = []
    gadgets: dict[int, GadgetTree] = {}
    deg = g.degrees
    root_degrees = [(v, m + 3 - int(deg[v])) for v in original]
    root_degrees += [(r, m + 2) for r in edge_root + list(special.values())]
    for root, d in root_degrees:
        gadget = build_gadget_tree(d, m, root, nxt)
        gadgets[root] = gadget
        edges.extend(gadget.edges)
        roles = {x: "heavy" for x in gadget.heavy} | {x: "anchor" for x in gadget.anchors}
        for x in range(nxt, nxt + gadget.size - 1):
            prov.append(Provenance("gadget", root, roles.get(x, "leaf")))
        nxt += gadget.size - 1

    clique = edge_clique + [apex]
    edges.extend((a, b) for i, a in enumerate(clique) for b in clique[i + 1:])
    for j, (x, y) in enumerate(src_edges):
        edges.extend([(edge_clique[j], x), (edge_clique[j], y), (edge_clique[j], edge_root[j])])
    edges.extend((apex, special[s]) for s in "aeb")

    inst = ReductionInstance(
        g, build_graph(nxt, edges), m + 4, src_edges, original, edge_clique, apex, edge_root, special, gadgets, prov
    )
    audit_instance(inst)
    return inst


def expected_vertex_count(g: Graph) -> int:
    m = g.m
    return sum(gadget_size(m + 3 - int(d), m) for d in g.degrees) + (m + 3) * gadget_size(m + 2, m) + (m + 1)


def audit_instance(inst: ReductionInstance) -> None:
    """Raise :class:`ReductionAuditError` naming the first broken structural invariant."""
    gp, m = inst.gprime, inst.m
    deg = gp.degrees
    target = m + 3
    if gp.n != expected_vertex_count(inst.source):
        raise ReductionAuditError("vertex-count", f"{gp.n} vertices, expected {expected_vertex_count(inst.source)}")
    if len(inst.clique) != m + 1:
        raise ReductionAuditError("clique-size", f"|A| = {len(inst.clique)}, expected {m + 1}")
    checks = (
        ("original-degree", inst.original),
        ("edge-clique-degree", inst.edge_clique),
        ("apex-degree", [inst.apex]),
        ("root-degree", inst.edge_root + [inst.special[s] for s in "aeb"]),
    )
    for name, vertices in checks:
        for v in vertices:
            if deg[v] != target:
                raise ReductionAuditError(name, f"vertex {v} has degree {int(deg[v])}, expected {target}")
    clique = set(inst.clique)
    for a in inst.clique:
        if len(clique & gp.neighbor_sets[a]) != m:
            raise ReductionAuditError("clique", f"vertex {a} is not adjacent to the whole clique")
    for root, gadget in inst.gadgets.items():
        for x in gadget.heavy + gadget.anchors:
            if deg[x] != target:
                raise ReductionAuditError("gadget-degree", f"vertex {x} (under root {root}) has degree {int(deg[x])}")
        high = sum(1 for u in gp.neighbors(root) if u in gadget.heavy and deg[u] >= target)
        if high != 2:
            raise ReductionAuditError("gadget-root", f"root {root} has {high} heavy gadget neighbours")
        for x in gadget.internal:
            count = int((deg[gp.neighbors(x)] >= deg[x]).sum())
            if count > 2:
                raise ReductionAuditError(
                    "gadget-high-degree-neighbours", f"vertex {x} has {count} neighbours of degree >= its own"
                )
    ok, _ = is_chordal(gp)
    if not ok:
        raise ReductionAuditError("chordal", "G' is not chordal")


def _check_coloring(g: Graph, coloring: Sequence[int]) -> None:
    if len(coloring) != g.n:
        raise ColoringError(f"colouring has {len(coloring)} entries for {g.n} vertices")
    for v, c in enumerate(coloring):
        if c not in (1, 2, 3):
            raise ColoringError(f"vertex {v} has colour {c}, expected 1, 2 or 3")
    for u, v in g.edges():
        if coloring[u] == coloring[v]:
            raise ColoringError(f"edge ({u}, {v}) is monochromatic (colour {coloring[u]})")


def coloring_to_partition(g: Graph, coloring: Sequence[int], inst: ReductionInstance) -> VertexPartition:
    """Strong transitive partition of ``G'`` with ``m + 4`` classes from a proper 3-colouring."""
    _check_coloring(g, coloring)
    labels = [1] * inst.gprime.n
    root_class = {v: int(coloring[v]) for v in inst.original}
    root_class[inst.special["a"]] = 3
    root_class[inst.special["e"]] = 2
    root_class[inst.special["b"]] = 1
    for j, (x, y) in enumerate(inst.source_edges):
        (rest,) = {1, 2, 3} - {coloring[x], coloring[y]}
        root_class[inst.edge_root[j]] = rest
    for root, q in root_class.items():
        labels[root] = q
        h1, h2 = inst.gadgets[root].heavy
        if q == 3:
            labels[h2] = 2
        # q == 2: h1 (in V_1) dominates the root; q == 1: nothing to do
    for j, e_j in enumerate(inst.edge_clique, 1):
        labels[e_j] = 3 + j
    labels[inst.apex] = inst.m + 4
    return VertexPartition.from_labels(labels)


class ContractViolation(RuntimeError):
    pass


def partition_to_coloring(partition: VertexPartition, inst: ReductionInstance) -> list[int]:
    """Colour each original vertex by its class index; must yield a proper 3-colouring."""
    if partition.k < inst.k:
        raise ValueError(f"partition has {partition.k} classes; at least {inst.k} are needed")
    labels = partition.labels()
    if labels.shape[0] != inst.gprime.n:
        raise ValueError("partition does not cover G'")
    coloring = [int(labels[v]) for v in inst.original]
    for v, c in enumerate(coloring):
        if c >= 4:
            raise ContractViolation(f"original vertex {v} sits in class {c}; only classes 1..3 are possible")
    try:
        _check_coloring(inst.source, coloring)
    except ColoringError as exc:
        raise ContractViolation(str(exc)) from None
    return coloring


def write_provenance(inst: ReductionInstance) -> str:
    """One line per vertex of ``G'``: ``id tag owner`` (``-`` when there is no owner)."""
    lines = []
    for v, p in enumerate(inst.provenance):
        owner = "-" if p.owner is None else p.owner
        lines.append(f"{v} {p.tag} {owner}")
    return "\n".join(lines)
