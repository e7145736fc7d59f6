"""Sparse vertex cutsets in bounded-degree graphs.

Certificate-producing constructions, extremal-family generators, and
independent brute-force oracles, plus edge-list/graph6 IO and a CLI.
"""

from .algorithms import (
    GrowthState,
    Thm5State,
    degenerate_sparse_cutset,
    prop1_is_icosahedron,
    prop2_cutset,
    theorem1_cutset,
    theorem2_cutset,
    theorem3_dichotomy,
    theorem4_independent_cutset,
    theorem5_certify,
)
from .certificates import (
    Certificate,
    GoodCutset,
    IndependentCutset,
    IsIcosahedron,
    KrrWitness,
    SquaredCycleIso,
    certificate_from_dict,
    certificate_to_dict,
)
from .errors import (
    BudgetExhausted,
    GraphError,
    InternalInvariantError,
    NoCutsetFound,
    PreconditionError,
)
from .generators import (
    CliqueChainParams,
    clique_chain,
    figure2_pattern,
    icosahedron,
    named_small,
    random_regular,
    squared_cycle,
    squared_path,
)
from .graph import (
    CutsetReport,
    Graph,
    VertexSet,
    components,
    induced_stats,
    induced_subgraph,
    is_connected,
    is_cutset,
    min_degree_vertex,
    neighborhood_induced,
)
from .io import (
    emit_edge_list,
    emit_graph6,
    graph_digest,
    parse_edge_list,
    parse_graph6,
    to_dot,
)
from .oracles import (
    OracleBudget,
    enumerate_min_cutsets,
    find_constrained_cutset,
    find_independent_cutset,
    find_krr,
    recognize_pattern,
    recognize_squared_cycle,
    verify_certificate,
    vertex_connectivity,
)

__all__ = [
    "BudgetExhausted",
    "Certificate",
    "CliqueChainParams",
    "CutsetReport",
    "GoodCutset",
    "Graph",
    "GraphError",
    "GrowthState",
    "IndependentCutset",
    "InternalInvariantError",
    "IsIcosahedron",
    "KrrWitness",
    "NoCutsetFound",
    "OracleBudget",
    "PreconditionError",
    "SquaredCycleIso",
    "Thm5State",
    "VertexSet",
    "certificate_from_dict",
    "certificate_to_dict",
    "clique_chain",
    "components",
    "degenerate_sparse_cutset",
    "emit_edge_list",
    "emit_graph6",
    "enumerate_min_cutsets",
    "figure2_pattern",
    "find_constrained_cutset",
    "find_independent_cutset",
    "find_krr",
    "graph_digest",
    "icosahedron",
    "induced_stats",
    "induced_subgraph",
    "is_connected",
    "is_cutset",
    "min_degree_vertex",
    "named_small",
    "neighborhood_induced",
    "parse_edge_list",
    "parse_graph6",
    "prop1_is_icosahedron",
    "prop2_cutset",
    "random_regular",
    "recognize_pattern",
    "recognize_squared_cycle",
    "squared_cycle",
    "squared_path",
    "theorem1_cutset",
    "theorem2_cutset",
    "theorem3_dichotomy",
    "theorem4_independent_cutset",
    "theorem5_certify",
    "to_dot",
    "verify_certificate",
    "vertex_connectivity",
]

__version__ = "0.1.0"
