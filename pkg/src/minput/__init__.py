"""Minimum input selection for structural controllability.

Find a smallest set of state variables of a sparse linear system
``xdot = A x`` that, once each is driven by its own dedicated input,
makes the system structurally controllable, while never actuating a
given forbidden subset.  Runs in O(n + m * sqrt(n)).
"""

from .augment import (
    Diagnostics,
    IterationStats,
    LayeredDag,
    PathSet,
    augment_on_paths,
    extract_paths,
    layered_bfs,
    minimize,
)
from .errors import (
    BoundExceeded,
    IndexOutOfRange,
    IterationBoundExceeded,
    MinputError,
    NotSquare,
    ParseError,
)
from .flowgraph import FlowGraph, build_flow_graph
from .graph import (
    SccInfo,
    SparseDigraph,
    build_graph,
    induced_subgraph,
    isolated_vertices,
    reachable_from,
    scc_decompose,
)
from .matching import (
    MatchClass,
    Matching,
    Splitting,
    classify,
    cost,
    find_allowed_matching,
    hopcroft_karp,
    split,
)
from .oracle import (
    brute_force_min_cost_allowed_matching,
    brute_force_min_input_set,
    check_structural_controllability,
    numeric_rank_spot_check,
)
from .solver import (
    Problem,
    Solution,
    Unsolvable,
    UnsolvableReason,
    recover_input_set,
    solve,
)

__version__ = "0.1.0"

__all__ = [
    "BoundExceeded",
    "Diagnostics",
    "FlowGraph",
    "IndexOutOfRange",
    "IterationBoundExceeded",
    "IterationStats",
    "LayeredDag",
    "MatchClass",
    "Matching",
    "MinputError",
    "NotSquare",
    "ParseError",
    "PathSet",
    "Problem",
    "SccInfo",
    "Solution",
    "SparseDigraph",
    "Splitting",
    "Unsolvable",
    "UnsolvableReason",
    "augment_on_paths",
    "brute_force_min_cost_allowed_matching",
    "brute_force_min_input_set",
    "build_flow_graph",
    "build_graph",
    "check_structural_controllability",
    "classify",
    "cost",
    "extract_paths",
    "find_allowed_matching",
    "hopcroft_karp",
    "induced_subgraph",
    "isolated_vertices",
    "layered_bfs",
    "minimize",
    "numeric_rank_spot_check",
    "reachable_from",
    "recover_input_set",
    "scc_decompose",
    "solve",
    "split",
]
