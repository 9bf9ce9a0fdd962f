"""b-chromatic numbers of Kneser graphs: construction, verification, bounds,
and exact search with a brute-force cross-check."""

from .bcoloring import (
    BColoringFailure,
    BColoringVerdict,
    ClassAnalysis,
    Coloring,
    CountingRecord,
    ProofAnalysis,
    ProofCheckFailure,
    ProofStep,
    analyze_proof_structure,
    class_core,
    dominating_vertices,
    is_b_coloring,
    is_proper,
)
from .bounds import (
    BKBound,
    BoundsReport,
    Ratios,
    ScanRow,
    UBound,
    asymptotic_table,
    best_upper_bound,
    bk_bound,
    regular_bound,
    u_bound,
)
from .kneser import (
    DEFAULT_ENUMERATION_CAP,
    MAX_BITSET_GROUND_SIZE,
    Graph,
    InstanceTooLarge,
    KneserParams,
    VertexSubset,
    are_adjacent,
    binomial,
    build_graph,
    degree_regularity,
    enumerate_vertices,
)
from .solver import (
    DEFAULT_BRUTE_FORCE_CAP,
    DEFAULT_NODE_BUDGET,
    Budget,
    BudgetExceeded,
    SolveResult,
    SolveStats,
    brute_force_phi,
    degree_bound,
    exact_phi,
    feasible_b_coloring,
    heuristic_b_coloring,
)

__version__ = "0.1.0"

__all__ = [
    "BColoringFailure",
    "BColoringVerdict",
    "BKBound",
    "BoundsReport",
    "Budget",
    "BudgetExceeded",
    "ClassAnalysis",
    "Coloring",
    "CountingRecord",
    "DEFAULT_BRUTE_FORCE_CAP",
    "DEFAULT_ENUMERATION_CAP",
    "DEFAULT_NODE_BUDGET",
    "Graph",
    "InstanceTooLarge",
    "KneserParams",
    "MAX_BITSET_GROUND_SIZE",
    "ProofAnalysis",
    "ProofCheckFailure",
    "ProofStep",
    "Ratios",
    "ScanRow",
    "SolveResult",
    "SolveStats",
    "UBound",
    "VertexSubset",
    "analyze_proof_structure",
    "are_adjacent",
    "asymptotic_table",
    "best_upper_bound",
    "binomial",
    "bk_bound",
    "brute_force_phi",
    "build_graph",
    "class_core",
    "degree_bound",
    "degree_regularity",
    "dominating_vertices",
    "enumerate_vertices",
    "exact_phi",
    "feasible_b_coloring",
    "heuristic_b_coloring",
    "is_b_coloring",
    "is_proper",
    "regular_bound",
    "u_bound",
]
