"""CNF encoding of "a strong transitive partition of size k exists" and a small DPLL.

Variable ``x(v, i)`` (vertex ``v`` in class ``i``, ``1 <= i <= k``) is numbered
``v * k + i``.  The solver is intentionally plain: unit propagation,
pure-literal elimination, lowest-index branching with ``True`` first, no
learning.  It exists to cross-check the other oracles, not to be fast.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .formats import CnfFormula
from .graph import Graph
from .partition import PartitionError, VertexPartition

SAT = "sat"
UNSAT = "unsat"
BUDGET_EXHAUSTED = "budget_exhausted"


def var(v: int, i: int, k: int) -> int:
    return v * k + i


def encode_tr_st_sat(g: Graph, k: int, strong: bool = True) -> CnfFormula:
    """Clauses: exactly one class per vertex, every class nonempty, and for each
    vertex ``v`` and classes ``i < j``: ``x(v,j) -> OR x(u,i)`` over neighbours ``u``
    that may dominate ``v``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    deg = g.degrees
    clauses: list[list[int]] = []
    for v in range(g.n):
        clauses.append([var(v, i, k) for i in range(1, k + 1)])
        clauses.extend([-var(v, i, k), -var(v, j, k)] for i, j in combinations(range(1, k + 1), 2))
    for i in range(1, k + 1):
        clauses.append([var(v, i, k) for v in range(g.n)])
    for v, row in enumerate(g.adjacency):
        doms = [u for u in row if not strong or deg[u] >= deg[v]]
        for j in range(2, k + 1):
            for i in range(1, j):
                clauses.append([-var(v, j, k)] + [var(u, i, k) for u in doms])
    return CnfFormula(g.n * k, clauses)


@dataclass(frozen=True)
class SatResult:
    status: str
    model: Optional[tuple[bool, ...]] = None  # model[x - 1] is the value of variable x
    steps: int = 0

    @property
    def sat(self) -> bool:
        return self.status == SAT


def dpll_solve(f: CnfFormula, budget: Optional[int] = None) -> SatResult:
    """Complete DPLL search; ``budget`` caps the number of variable assignments."""
    f.validate()
    nv = f.variable_count
    clauses = [sorted(set(c)) for c in f.clauses]
    occ: dict[int, list[int]] = {}
    for ci, c in enumerate(clauses):
        for lit in c:
            occ.setdefault(lit, []).append(ci)
    size = [len(c) for c in clauses]
    n_true = [0] * len(clauses)
    n_false = [0] * len(clauses)
    active = {lit: len(cs) for lit, cs in occ.items()}  # occurrences in unsatisfied clauses
    value = [0] * (nv + 1)
    trail: list[int] = []
    # one entry per decision: (trail length before it, literal, flipped already)
    decisions: list[tuple[int, int, bool]] = []
    queue: list[int] = [ci for ci, c in enumerate(clauses) if len(c) == 1]
    steps = 0

    def assign(lit: int) -> bool:
        """Set ``lit`` true; False on conflict (the assignment is still recorded)."""
        value[abs(lit)] = 1 if lit > 0 else -1
        trail.append(lit)
        ok = True
        for ci in occ.get(lit, ()):
            n_true[ci] += 1
            if n_true[ci] == 1:
                for other in clauses[ci]:
                    active[other] -= 1
        for ci in occ.get(-lit, ()):
            n_false[ci] += 1
            if n_true[ci] == 0:
                if n_false[ci] == size[ci]:
                    ok = False
                elif n_false[ci] == size[ci] - 1:
                    queue.append(ci)
        return ok

    def unassign(lit: int) -> None:
        value[abs(lit)] = 0
        for ci in occ.get(lit, ()):
            n_true[ci] -= 1
            if n_true[ci] == 0:
                for other in clauses[ci]:
                    active[other] += 1
        for ci in occ.get(-lit, ()):
            n_false[ci] -= 1

    def lit_value(lit: int) -> int:
        x = value[abs(lit)]
        return x if lit > 0 else -x

    def propagate() -> bool:
        nonlocal steps
        while queue:
            ci = queue.pop()
            if n_true[ci]:
                continue
            free = [lit for lit in clauses[ci] if lit_value(lit) == 0]
            if not free:
                queue.clear()
                return False
            steps += 1
            if not assign(free[0]):
                queue.clear()
                return False
        return True

    def backtrack() -> bool:
        nonlocal steps
        while decisions:
            mark, lit, flipped = decisions.pop()
            while len(trail) > mark:
                unassign(trail.pop())
            if not flipped:
                decisions.append((mark, -lit, True))
                steps += 1
                if assign(-lit):
                    return True
                # the flipped literal conflicts at once; keep unwinding
                queue.clear()
        return False

    ok = True
    while True:
        if budget is not None and steps > budget:
            return SatResult(BUDGET_EXHAUSTED, None, steps)
        if not ok or not propagate():
            queue.clear()
            if not backtrack():
                return SatResult(UNSAT, None, steps)
            ok = True
            continue
        pure = None
        for x in range(1, nv + 1):
            if value[x] == 0:
                pos, neg = active.get(x, 0), active.get(-x, 0)
                if pos and not neg:
                    pure = x
                    break
                if neg and not pos:
                    pure = -x
                    break
        if pure is not None:
            steps += 1
            ok = assign(pure)
            continue
        free_var = next((x for x in range(1, nv + 1) if value[x] == 0), None)
        if free_var is None:
            return SatResult(SAT, tuple(value[x] > 0 for x in range(1, nv + 1)), steps)
        decisions.append((len(trail), free_var, False))
        steps += 1
        ok = assign(free_var)


def decode_model(g: Graph, k: int, model: Sequence[bool]) -> VertexPartition:
    """Read the class of each vertex off a model of :func:`encode_tr_st_sat`."""
    if len(model) < g.n * k:
        raise PartitionError(f"model has {len(model)} variables, expected {g.n * k}")
    labels = []
    for v in range(g.n):
        chosen = [i for i in range(1, k + 1) if model[var(v, i, k) - 1]]
        if len(chosen) != 1:
            raise PartitionError(f"vertex {v} is assigned to classes {chosen}, expected exactly one")
        labels.append(chosen[0])
    return VertexPartition.from_labels(labels)
