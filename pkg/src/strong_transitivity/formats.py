"""Text formats: native edge lists, DIMACS ``.col`` graphs, partitions, DIMACS CNF.

All writers emit LF line endings, single spaces between tokens and no
trailing newline.  Parsers
raise :class:`FormatError` (carrying a 1-based line number where it applies)
and never let lower-level exceptions escape.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .graph import Graph, GraphError, build_graph
from .partition import PartitionError, VertexPartition


class FormatError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _decode(text: Union[str, bytes]) -> str:
    if isinstance(text, bytes):
        try:
            return text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise FormatError(f"input is not UTF-8 text ({exc.reason})") from None
    return text


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatError(f"malformed integer token in {' '.join(tokens)!r}", lineno) from None


def _content_lines(text: str, comment: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith(comment):
            continue
        yield lineno, line.split()


def _build(n: int, edges: list[tuple[int, int]]) -> Graph:
    try:
        return build_graph(n, edges)
    except (GraphError, MemoryError, OverflowError) as exc:
        raise FormatError(f"cannot build graph: {exc}") from None


# -- graphs -------------------------------------------------------------------


def parse_edge_list(text: Union[str, bytes]) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"`` (0-based, ``#`` comments)."""
    lines = _content_lines(_decode(text), "#")
    header = next(lines, None)
    if header is None:
        raise FormatError("missing 'n m' header")
    lineno, tokens = header
    if len(tokens) != 2:
        raise FormatError("header must be 'n m'", lineno)
    n, m = _ints(tokens, lineno)
    if n < 0 or m < 0:
        raise FormatError("negative count in header", lineno)
    edges = []
    for lineno, tokens in lines:
        if len(tokens) != 2:
            raise FormatError("edge line must be 'u v'", lineno)
        u, v = _ints(tokens, lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"endpoint of ({u}, {v}) outside 0..{n - 1}", lineno)
        if u == v:
            raise FormatError(f"self-loop ({u}, {v})", lineno)
        edges.append((u, v))
    if len(edges) != m:
        raise FormatError(f"header declares {m} edges but {len(edges)} were given")
    return _build(n, edges)


def write_edge_list(g: Graph) -> str:
    edges = g.edges()
    return "\n".join([f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges])


def parse_dimacs_col(text: Union[str, bytes]) -> Graph:
    """Parse DIMACS ``p edge n m`` / ``e u v`` (1-based) into a 0-based graph."""
    n: Optional[int] = None
    edges = []
    for lineno, tokens in _content_lines(_decode(text), "c"):
        tag = tokens[0]
        if tag == "p":
            if n is not None:
                raise FormatError("duplicate problem line", lineno)
            if len(tokens) != 4 or tokens[1] not in ("edge", "col"):
                raise FormatError("problem line must be 'p edge n m'", lineno)
            n, _ = _ints(tokens[2:], lineno)
            if n < 0:
                raise FormatError("negative vertex count", lineno)
        elif tag == "e":
            if n is None:
                raise FormatError("edge line before 'p edge' header", lineno)
            if len(tokens) != 3:
                raise FormatError("edge line must be 'e u v'", lineno)
            u, v = _ints(tokens[1:], lineno)
            if not (1 <= u <= n and 1 <= v <= n):
                raise FormatError(f"vertex id in 'e {u} {v}' outside 1..{n}", lineno)
            if u == v:
                raise FormatError(f"self-loop 'e {u} {v}'", lineno)
            edges.append((u - 1, v - 1))
        else:
            raise FormatError(f"unknown line type {tag!r}", lineno)
    if n is None:
        raise FormatError("missing 'p edge n m' header")
    return _build(n, edges)


def write_dimacs_col(g: Graph) -> str:
    edges = g.edges()
    return "\n".join([f"p edge {g.n} {len(edges)}"] + [f"e {u + 1} {v + 1}" for u, v in edges])


def parse_graph(text: Union[str, bytes], fmt: str = "edgelist") -> Graph:
    if fmt == "edgelist":
        return parse_edge_list(text)
    if fmt == "dimacs":
        return parse_dimacs_col(text)
    raise FormatError(f"unknown graph format {fmt!r}")


# -- partitions ---------------------------------------------------------------


def write_partition(partition: VertexPartition) -> str:
    """First line ``k``, then class ``i`` on line ``i+1`` in ascending vertex order."""
    lines = [str(len(partition.classes))]
    lines += [" ".join(str(v) for v in sorted(cls)) for cls in partition.classes]
    return "\n".join(lines)


def parse_partition(text: Union[str, bytes], g: Optional[Graph] = None) -> VertexPartition:
    """Inverse of :func:`write_partition`; checks coverage of ``g`` when given."""
    raw = _decode(text).split("\n")
    if raw and raw[-1] == "":
        raw.pop()
    if not raw:
        raise FormatError("empty partition file")
    head = _ints(raw[0].split(), 1)
    if len(head) != 1 or head[0] < 1:
        raise FormatError("first line must be a positive class count", 1)
    k = head[0]
    if len(raw) - 1 != k:
        raise FormatError(f"declared {k} classes but found {len(raw) - 1} class lines")
    classes = []
    for i, line in enumerate(raw[1:], 2):
        tokens = line.split()
        if not tokens:
            raise FormatError(f"class {i - 1} is empty", i)
        classes.append(_ints(tokens, i))
    try:
        return VertexPartition.from_classes(classes, g.n if g is not None else None)
    except PartitionError as exc:
        raise FormatError(str(exc)) from None


# -- CNF ----------------------------------------------------------------------


@dataclass
class CnfFormula:
    variable_count: int
    clauses: list[list[int]] = field(default_factory=list)

    def validate(self) -> None:
        for idx, clause in enumerate(self.clauses):
            if not clause:
                raise FormatError(f"clause {idx} is empty")
            for lit in clause:
                if lit == 0 or abs(lit) > self.variable_count:
                    raise FormatError(f"literal {lit} in clause {idx} outside 1..{self.variable_count}")


def write_cnf_dimacs(f: CnfFormula) -> str:
    lines = [f"p cnf {f.variable_count} {len(f.clauses)}"]
    lines += [" ".join(str(lit) for lit in clause) + " 0" for clause in f.clauses]
    return "\n".join(lines)


def parse_cnf_dimacs(text: Union[str, bytes]) -> CnfFormula:
    nvars: Optional[int] = None
    clauses: list[list[int]] = []
    current: list[int] = []
    for lineno, tokens in _content_lines(_decode(text), "c"):
        if tokens[0] == "p":
            if len(tokens) != 4 or tokens[1] != "cnf":
                raise FormatError("problem line must be 'p cnf vars clauses'", lineno)
            nvars, _ = _ints(tokens[2:], lineno)
            continue
        if nvars is None:
            raise FormatError("clause before 'p cnf' header", lineno)
        for lit in _ints(tokens, lineno):
            if lit == 0:
                if not current:
                    raise FormatError("empty clause", lineno)
                clauses.append(current)
                current = []
            elif abs(lit) > nvars:
                raise FormatError(f"literal {lit} outside 1..{nvars}", lineno)
            else:
                current.append(lit)
    if nvars is None:
        raise FormatError("missing 'p cnf' header")
    if current:
        raise FormatError("last clause not terminated by 0")
    return CnfFormula(nvars, clauses)


__all__ = [
    "CnfFormula",
    "FormatError",
    "GraphError",
    "parse_cnf_dimacs",
    "parse_dimacs_col",
    "parse_edge_list",
    "parse_graph",
    "parse_partition",
    "write_cnf_dimacs",
    "write_dimacs_col",
    "write_edge_list",
    "write_partition",
]
