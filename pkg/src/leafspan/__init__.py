"""leafspan: spanning trees with well-separated leaves, verified.

A connected graph is certified — by exact edge counting, by spectral-radius
comparisons against an extremal family, or by an exhaustive search — to
contain a spanning tree whose leaves are pairwise far apart. The package
bundles the graph core, eigensolvers, the closed-form extremal thresholds,
the isolated-vertex structural conditions, complete spanning-tree searches,
verdict plumbing, and corpus generation behind one CLI.
"""
from ._kernels import KERNEL_MAX_ORDER, USING_JIT
from .extremal import (
    BoundCheck,
    BoundsReport,
    ExtremalParams,
    IntPolynomial,
    build_extremal,
    canonical_partition,
    char_poly,
    check_bounds,
    largest_root,
)
from .graph import (
    MAX_VERTICES,
    Graph,
    VertexSet,
    bfs_distances,
    complete,
    edgeless,
    from_edges,
    is_connected,
    join,
    mask_vertices,
    min_degree,
    transmissions,
    union,
    vertex_mask,
)
from .graphio import (
    EdgeListError,
    Graph6Error,
    format_edge_list,
    format_graph6,
    parse_edge_list,
    parse_graph6,
)
from .sampling import (
    EDGE_PROBABILITIES,
    connected_graph_masks,
    connected_graphs,
    graph_from_edge_mask,
    random_connected_graph,
    seeded_corpus,
)
from .spectra import (
    BASIC_KINDS,
    DEFAULT_TOL,
    ConvergenceError,
    MatrixKind,
    QuotientResult,
    adjacency_matrix,
    build_matrix,
    check_quotient_radius,
    quotient,
    spectral_radius,
)
from .structural import (
    ConditionSpec,
    ViolationWitness,
    check_condition,
    isolated_count,
    isolated_set,
)
from .trees import (
    DEFAULT_BUDGET,
    BudgetExhausted,
    TreeCert,
    find_spanning_tree_leaf_degree,
    find_spanning_tree_leaf_distance,
    hamilton_path_extremal,
    leaf_degree,
    leaf_distance,
)
from .verify import (
    ALL_THEOREMS,
    FalsificationWarning,
    LemmaSuiteReport,
    TheoremId,
    Verdict,
    edge_bound,
    evaluate,
    evaluate_all,
    evaluate_auto,
    is_falsification,
    lemma_suite,
    min_admissible_order,
    oracle_confirm,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "KERNEL_MAX_ORDER",
    "USING_JIT",
    "MAX_VERTICES",
    "Graph",
    "VertexSet",
    "bfs_distances",
    "complete",
    "edgeless",
    "from_edges",
    "is_connected",
    "join",
    "mask_vertices",
    "min_degree",
    "transmissions",
    "union",
    "vertex_mask",
    "EdgeListError",
    "Graph6Error",
    "format_edge_list",
    "format_graph6",
    "parse_edge_list",
    "parse_graph6",
    "BASIC_KINDS",
    "DEFAULT_TOL",
    "ConvergenceError",
    "MatrixKind",
    "QuotientResult",
    "adjacency_matrix",
    "build_matrix",
    "check_quotient_radius",
    "quotient",
    "spectral_radius",
    "BoundCheck",
    "BoundsReport",
    "ExtremalParams",
    "IntPolynomial",
    "build_extremal",
    "canonical_partition",
    "char_poly",
    "check_bounds",
    "largest_root",
    "ConditionSpec",
    "ViolationWitness",
    "check_condition",
    "isolated_count",
    "isolated_set",
    "DEFAULT_BUDGET",
    "BudgetExhausted",
    "TreeCert",
    "find_spanning_tree_leaf_degree",
    "find_spanning_tree_leaf_distance",
    "hamilton_path_extremal",
    "leaf_degree",
    "leaf_distance",
    "EDGE_PROBABILITIES",
    "connected_graph_masks",
    "connected_graphs",
    "graph_from_edge_mask",
    "random_connected_graph",
    "seeded_corpus",
    "ALL_THEOREMS",
    "FalsificationWarning",
    "LemmaSuiteReport",
    "TheoremId",
    "Verdict",
    "edge_bound",
    "evaluate",
    "evaluate_all",
    "evaluate_auto",
    "is_falsification",
    "lemma_suite",
    "min_admissible_order",
    "oracle_confirm",
]
