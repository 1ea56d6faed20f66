"""Strong transitivity of graphs: exact solvers for trees and split graphs,
small-graph oracles, a partition verifier and the 3-colouring reduction."""

from .graph import BfsOrdering, Graph, GraphError, bfs_ordering, build_graph, is_chordal, is_connected, is_tree
from .partition import PartitionError, VertexPartition
from .verify import Verdict, Violation, dominates, strongly_dominates, verify_strong_transitive, verify_transitive
from .oracle import brute_3coloring, brute_st_number, brute_tr, brute_tr_st
from .tree import TreeTables, mark_required, qualified_values, solve_tree, strong_transitive_number, tr_st_tree, witness_partition_tree
from .split import SplitDecomposition, recognize_split, solve_split, tr_st_split
from .sat import decode_model, dpll_solve, encode_tr_st_sat
from .reduction import ReductionInstance, build_gadget_tree, coloring_to_partition, partition_to_coloring, reduce_3col_to_mstdp

__version__ = "0.1.0"
