"""Command-line front end.

Exit codes: 0 ok, 1 invalid partition, 2 unreadable/malformed input,
3 graph too large for the exact oracle, 4 unsupported graph class
(forest, disconnected, or wrong class for the forced method),
5 structurally malformed partition.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path
from typing import Optional, Sequence

from . import generators as gens
from .formats import (
    FormatError,
    parse_graph,
    parse_partition,
    write_cnf_dimacs,
    write_dimacs_col,
    write_edge_list,
    write_partition,
)
from .graph import Graph, GraphError, is_connected, is_tree
from .oracle import ORACLE_LIMIT, OracleLimitError, brute_st_number, brute_tr, brute_tr_st
from .partition import PartitionError
from .reduction import reduce_3col_to_mstdp, write_provenance
from .sat import decode_model, dpll_solve, encode_tr_st_sat
from .split import recognize_split, solve_split, tr_st_split
from .tree import NotATreeError, solve_tree, tr_st_tree
from .verify import verify_strong_transitive, verify_transitive

EXIT_OK, EXIT_INVALID, EXIT_IO, EXIT_TOO_LARGE, EXIT_UNSUPPORTED, EXIT_MALFORMED = range(6)


class CliError(Exception):
    def __init__(self, code: int, message: str):
        self.code = code
        super().__init__(message)


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except (OSError, UnicodeDecodeError) as exc:
        raise CliError(EXIT_IO, f"cannot read {path}: {exc}") from None


def _load_graph(path: str, fmt: str) -> Graph:
    try:
        return parse_graph(_read(path), fmt)
    except FormatError as exc:
        raise CliError(EXIT_IO, f"{path}: {exc}") from None


def _write(path: str, text: str) -> None:
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise CliError(EXIT_IO, f"cannot write {path}: {exc}") from None


def _sat_tr_st(g: Graph):
    for k in range(g.max_degree + 1, 0, -1):
        res = dpll_solve(encode_tr_st_sat(g, k))
        if res.sat:
            return k, decode_model(g, k, res.model)
    raise AssertionError("k = 1 is always satisfiable")


def _solve(g: Graph, method: str, limit: int):
    if g.n == 0:
        raise CliError(EXIT_UNSUPPORTED, "empty graph")
    if not is_connected(g):
        kind = "forest" if g.m == g.n - _components(g) else "disconnected graph"
        raise CliError(EXIT_UNSUPPORTED, f"input is a {kind}; only connected graphs are supported")
    if method == "auto":
        if is_tree(g):
            method = "tree"
        elif recognize_split(g) is not None:
            method = "split"
        elif g.n <= limit:
            method = "oracle"
        else:
            raise CliError(EXIT_TOO_LARGE, f"graph with {g.n} vertices is neither a tree nor split and exceeds the oracle limit {limit}")
    if method == "tree":
        try:
            k, witness = tr_st_tree(g)
        except NotATreeError as exc:
            raise CliError(EXIT_UNSUPPORTED, str(exc)) from None
    elif method == "split":
        solved = solve_split(g)
        if solved is None:
            raise CliError(EXIT_UNSUPPORTED, "input is not a split graph")
        k, witness = solved
    elif method in ("oracle", "sat"):
        if g.n > limit:
            raise CliError(EXIT_TOO_LARGE, f"graph has {g.n} vertices; the exact oracle is limited to {limit}")
        k, witness = brute_tr_st(g, limit) if method == "oracle" else _sat_tr_st(g)
    else:
        raise CliError(EXIT_UNSUPPORTED, f"unknown method {method!r}")
    return k, witness, method


def _components(g: Graph) -> int:
    from scipy.sparse.csgraph import connected_components

    return int(connected_components(g.to_csr(), directed=False)[0])


def cmd_solve(args) -> int:
    g = _load_graph(args.input, args.format)
    k, witness, method = _solve(g, args.method, args.limit)
    verdict = verify_strong_transitive(g, witness)
    if not verdict.valid or witness.k != k:
        raise RuntimeError(f"internal error: {method} produced an invalid witness ({verdict.violation})")
    print(f"Tr_st = {k} (method: {method})")
    if args.witness:
        _write(args.witness, write_partition(witness))
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _load_graph(args.input, args.format)
    try:
        partition = parse_partition(_read(args.partition), g)
    except FormatError as exc:
        print(f"malformed partition: {exc}")
        return EXIT_MALFORMED
    strong = args.mode == "strong"
    try:
        verdict = (verify_strong_transitive if strong else verify_transitive)(g, partition)
    except PartitionError as exc:
        print(f"malformed partition: {exc}")
        return EXIT_MALFORMED
    if verdict.valid:
        print(f"valid {'strong ' if strong else ''}transitive partition with {partition.k} classes")
        return EXIT_OK
    print(verdict.violation.describe(strong))
    return EXIT_INVALID


def cmd_reduce(args) -> int:
    g = _load_graph(args.input, args.format)
    if not is_connected(g):
        raise CliError(EXIT_UNSUPPORTED, "the reduction requires a connected input graph")
    try:
        inst = reduce_3col_to_mstdp(g)
    except GraphError as exc:
        raise CliError(EXIT_UNSUPPORTED, str(exc)) from None
    _write(f"{args.out}.graph", write_edge_list(inst.gprime))
    _write(f"{args.out}.provenance", write_provenance(inst))
    print(f"k = {inst.k}")
    return EXIT_OK


def cmd_stnumber(args) -> int:
    g = _load_graph(args.input, args.format)
    try:
        st = solve_tree(g).st
    except NotATreeError as exc:
        raise CliError(EXIT_UNSUPPORTED, str(exc)) from None
    print(" ".join(f"{v}:{int(s)}" for v, s in enumerate(st)))
    return EXIT_OK


FAMILIES = {
    "path": lambda a: gens.gen_path(a.n),
    "cycle": lambda a: gens.gen_cycle(a.n),
    "complete": lambda a: gens.gen_complete(a.n),
    "complete-bipartite": lambda a: gens.gen_complete_bipartite(a.a, a.b),
    "star": lambda a: gens.gen_star(a.n),
    "random-tree": lambda a: gens.gen_random_tree(a.n, a.seed),
    "random-split": lambda a: gens.gen_random_split(a.n, a.seed, a.clique_size, a.p),
    "random-graph": lambda a: gens.gen_random_graph(a.n, a.p, a.seed),
}


def cmd_gen(args) -> int:
    try:
        g = FAMILIES[args.family](args)
    except (GraphError, TypeError) as exc:
        raise CliError(EXIT_IO, f"cannot generate {args.family}: {exc}") from None
    text = write_edge_list(g) if args.out_format == "edgelist" else write_dimacs_col(g)
    if args.out:
        _write(args.out, text)
    else:
        print(text)
    return EXIT_OK


def cmd_encode(args) -> int:
    g = _load_graph(args.input, args.format)
    _write(args.out, write_cnf_dimacs(encode_tr_st_sat(g, args.k, strong=not args.plain)))
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = _load_graph(args.input, args.format)
    try:
        if args.vertex is not None:
            print(f"st({args.vertex}) = {brute_st_number(g, args.vertex, args.limit)}")
            return EXIT_OK
        if not is_connected(g):
            raise CliError(EXIT_UNSUPPORTED, "the oracle requires a connected graph")
        k, _ = brute_tr_st(g, args.limit)
        print(f"Tr_st = {k}, Tr = {brute_tr(g, args.limit)}")
    except OracleLimitError as exc:
        raise CliError(EXIT_TOO_LARGE, str(exc)) from None
    except GraphError as exc:
        raise CliError(EXIT_UNSUPPORTED, str(exc)) from None
    return EXIT_OK


def cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s]
    tr_st_tree(gens.gen_path(8))  # JIT warm-up
    print("size,seconds,vertices_per_second")
    for n in sizes:
        if args.family == "tree":
            g = gens.gen_random_tree(n, args.seed)
            run = lambda: tr_st_tree(g)
        else:
            g = gens.gen_random_split(n, args.seed, clique_size=min(n, 200), p=0.01)
            run = lambda: tr_st_split(g, recognize_split(g))
        best = float("inf")
        for _ in range(args.repeats):
            t0 = time.perf_counter()
            run()
            best = min(best, time.perf_counter() - t0)
        print(f"{n},{best:.6f},{n / best:.1f}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="strong-transitivity", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_input(p, flag="--input"):
        p.add_argument(flag, required=True, help="graph file")
        p.add_argument("--format", choices=["edgelist", "dimacs"], default="edgelist")

    p = sub.add_parser("solve", help="compute Tr_st with a verified witness")
    graph_input(p)
    p.add_argument("--method", choices=["auto", "tree", "split", "oracle", "sat"], default="auto")
    p.add_argument("--witness", help="write the witness partition here")
    p.add_argument("--limit", type=int, default=ORACLE_LIMIT, help="vertex limit for exact methods")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a partition")
    graph_input(p)
    p.add_argument("--partition", required=True)
    p.add_argument("--mode", choices=["strong", "plain"], default="strong")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reduce", help="build the 3-colouring reduction instance")
    p.add_argument("--input", required=True, help="graph file (DIMACS by default)")
    p.add_argument("--format", choices=["edgelist", "dimacs"], default="dimacs")
    p.add_argument("--out", required=True, help="output prefix")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("stnumber", help="per-vertex strong transitive numbers of a tree")
    graph_input(p)
    p.set_defaults(func=cmd_stnumber)

    p = sub.add_parser("gen", help="generate a graph")
    p.add_argument("--family", choices=sorted(FAMILIES), required=True)
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--a", type=int, default=3)
    p.add_argument("--b", type=int, default=2)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--clique-size", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.add_argument("--out-format", choices=["edgelist", "dimacs"], default="edgelist")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("encode", help="write the CNF for 'Tr_st >= k'")
    graph_input(p)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--plain", action="store_true", help="encode ordinary transitivity instead")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("oracle", help="exact brute-force values")
    graph_input(p)
    p.add_argument("--vertex", type=int)
    p.add_argument("--limit", type=int, default=ORACLE_LIMIT)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("bench", help="time a solver on growing random instances (CSV)")
    p.add_argument("--family", choices=["tree", "split"], default="tree")
    p.add_argument("--sizes", default="65536,131072,262144")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--repeats", type=int, default=3)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
