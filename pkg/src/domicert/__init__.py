"""Exact minimum-family solvers and exhaustive verification for
edge-vertex domination and paired domination on small graphs."""

from .census import (
    CensusConfig,
    CensusReport,
    figure1_claims,
    figure1_graph,
    generate_connected_graphs,
    generate_trees,
    run_census,
    tree_class_count,
    verify_graph,
)
from .domination import (
    DEFAULT_BUDGET,
    MinSetFamily,
    UniquenessVerdict,
    ev_dominates,
    gamma_ev_tree_fast,
    is_dominating_set,
    is_ev_dominating_set,
    is_paired_dominating_set,
    solve_ev,
    solve_pr,
    spanned_vertices,
    uniqueness,
)
from .errors import (
    CapabilityError,
    DomainError,
    DomicertError,
    GraphParseError,
    InvariantViolation,
    NotMinimumWitness,
)
from .graphs import (
    Graph,
    canonical_code,
    emit_edge_list,
    emit_graph6,
    has_perfect_matching,
    induced_subgraph,
    is_connected,
    is_tree,
    parse_edge_list,
    parse_graph6,
    perfect_matchings_within,
)
from .twinning import (
    DetangleResult,
    TwinningStep,
    check_claim,
    detangle,
    find_private_vertex,
    sharing_pairs,
    twinning,
)

__all__ = [
    "CapabilityError",
    "CensusConfig",
    "CensusReport",
    "DEFAULT_BUDGET",
    "DetangleResult",
    "DomainError",
    "DomicertError",
    "Graph",
    "GraphParseError",
    "InvariantViolation",
    "MinSetFamily",
    "NotMinimumWitness",
    "TwinningStep",
    "UniquenessVerdict",
    "canonical_code",
    "check_claim",
    "detangle",
    "emit_edge_list",
    "emit_graph6",
    "ev_dominates",
    "figure1_claims",
    "figure1_graph",
    "find_private_vertex",
    "gamma_ev_tree_fast",
    "generate_connected_graphs",
    "generate_trees",
    "has_perfect_matching",
    "induced_subgraph",
    "is_connected",
    "is_dominating_set",
    "is_ev_dominating_set",
    "is_paired_dominating_set",
    "is_tree",
    "parse_edge_list",
    "parse_graph6",
    "perfect_matchings_within",
    "run_census",
    "sharing_pairs",
    "solve_ev",
    "solve_pr",
    "spanned_vertices",
    "tree_class_count",
    "twinning",
    "uniqueness",
    "verify_graph",
]

__version__ = "0.1.0"
