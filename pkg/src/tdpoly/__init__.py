"""Exact computation and verification of total domination polynomials.

D_t(G, x) = sum over i of d_t(G, i) x^i, where d_t(G, i) counts the i-element
vertex sets W such that every vertex of G -- members of W included -- has a
neighbor in W. The package pairs a brute-force bitmask oracle with reduction
identities, fast recurrences for structured families, numeric closed forms,
and extremal scans, so that every faster route can be checked against ground
truth.
"""

from .closedform import (
    RootQuad,
    cycle_closed_eval,
    forest_at_minus_one,
    path_at_minus_one,
    path_closed_eval,
    star_at_minus_one,
    star_tdp,
    verify_closed_forms,
    verify_minus_one,
)
from .errors import BudgetError, GraphParseError, InternalConsistencyError
from .extremal import (
    degree2_row,
    gamma_bounds_row,
    gamma_scan_corpus,
    is_two_corona,
    minimal_tree_scan,
    non_supporting_pair_set,
    scan_degree2,
    scan_gamma_bounds,
    scan_tree_bound,
    supporting_identity,
    tree_bound_row,
    verify_basic_identities,
)
from .graph import (
    Graph,
    all_labeled_trees,
    classify_vertices,
    cycle_graph,
    disjoint_union,
    fixed_small_corpus,
    is_cycle_shaped,
    is_path_shaped,
    is_star_shaped,
    join,
    parse_edge_list,
    path_graph,
    random_connected_corpus,
    random_connected_graph,
    random_forest,
    random_tree,
    star_graph,
    to_edge_list,
    two_corona,
    union,
)
from .kernels import active_backend
from .oracle import (
    Condition,
    brute_force_tdp,
    brute_force_tdp_conditioned,
    gamma_t,
    is_total_dominating,
    tdp_by_components,
)
from .polynomial import IntPoly, coeffwise_le, ensure_valid_tdp
from .reduction import (
    cycle_tdp,
    edge_reduction_rhs,
    indicator_tdp,
    path_tdp,
    simple_vertex_reduction_applies,
    simple_vertex_reduction_rhs,
    tree_tdp,
    verify_conditioned_path_recurrence,
    verify_edge_reduction,
    verify_recurrences,
    verify_vertex_reduction,
    vertex_reduction_rhs,
)
from .reports import IdentityFailure, ScanReport, VerificationReport

__version__ = "0.1.0"

__all__ = [
    "BudgetError",
    "Condition",
    "Graph",
    "GraphParseError",
    "IdentityFailure",
    "IntPoly",
    "InternalConsistencyError",
    "RootQuad",
    "ScanReport",
    "VerificationReport",
    "active_backend",
    "all_labeled_trees",
    "brute_force_tdp",
    "brute_force_tdp_conditioned",
    "classify_vertices",
    "coeffwise_le",
    "cycle_closed_eval",
    "cycle_graph",
    "cycle_tdp",
    "degree2_row",
    "disjoint_union",
    "edge_reduction_rhs",
    "ensure_valid_tdp",
    "fixed_small_corpus",
    "forest_at_minus_one",
    "gamma_bounds_row",
    "gamma_scan_corpus",
    "gamma_t",
    "indicator_tdp",
    "is_cycle_shaped",
    "is_path_shaped",
    "is_star_shaped",
    "is_total_dominating",
    "is_two_corona",
    "join",
    "minimal_tree_scan",
    "non_supporting_pair_set",
    "parse_edge_list",
    "path_at_minus_one",
    "path_closed_eval",
    "path_graph",
    "path_tdp",
    "random_connected_corpus",
    "random_connected_graph",
    "random_forest",
    "random_tree",
    "scan_degree2",
    "scan_gamma_bounds",
    "scan_tree_bound",
    "simple_vertex_reduction_applies",
    "simple_vertex_reduction_rhs",
    "star_at_minus_one",
    "star_graph",
    "star_tdp",
    "supporting_identity",
    "tdp_by_components",
    "to_edge_list",
    "tree_bound_row",
    "tree_tdp",
    "two_corona",
    "union",
    "verify_basic_identities",
    "verify_closed_forms",
    "verify_conditioned_path_recurrence",
    "verify_edge_reduction",
    "verify_minus_one",
    "verify_recurrences",
    "verify_vertex_reduction",
    "vertex_reduction_rhs",
]
