"""Exact graph invariants and exhaustive verification of cycle bounds.

The library computes exact radius, diameter, circumference, geodesic
cycles, and block decompositions of simple undirected graphs; constructs
the families that make the radius/diameter cycle bounds tight; enumerates
connected graphs up to isomorphism; and sweeps universally quantified
claims over the whole universe of small connected graphs.
"""

from .canon import canonical_form
from .claims import (
    CLAIM_IDS,
    HOLDS,
    VACUOUS,
    VIOLATED,
    MinimalOrderResult,
    Verdict,
    VerificationReport,
    check_corollary3,
    check_theorem1,
    check_theorem4,
    minimal_order_search,
    verify_range,
)
from .cycles import (
    BlockDecomposition,
    CycleReport,
    block_decomposition,
    circumference,
    cycle_at_least,
    find_geodesic_cycle,
    is_geodesic_cycle,
    longest_geodesic_cycle,
)
from .enumeration import (
    GUARANTEED_N,
    MAX_GENERATED_N,
    GraphStream,
    connected_canonical_forms,
    enumerate_connected,
    graphs_from_lines,
    read_graph6_stream,
    worker_count,
)
from .families import (
    ContractError,
    SunSpec,
    cycle_graph,
    extremal_graph,
    multi_sun,
    sun_graph,
    tightness_witness,
)
from .graphs import (
    GRAPH6_MAX_N,
    Graph,
    Graph6Error,
    from_edges,
    is_connected,
    parse_graph6,
    permute,
    to_graph6,
)
from .metrics import (
    UNREACHABLE,
    MetricProfile,
    bfs_distances,
    distance_matrix,
    distance_to_subgraph,
    eccentricity,
    metric_profile,
)

__version__ = "0.1.0"

__all__ = [
    "BlockDecomposition",
    "CLAIM_IDS",
    "ContractError",
    "CycleReport",
    "GRAPH6_MAX_N",
    "GUARANTEED_N",
    "Graph",
    "Graph6Error",
    "GraphStream",
    "HOLDS",
    "MAX_GENERATED_N",
    "MetricProfile",
    "MinimalOrderResult",
    "SunSpec",
    "UNREACHABLE",
    "VACUOUS",
    "VIOLATED",
    "Verdict",
    "VerificationReport",
    "block_decomposition",
    "bfs_distances",
    "canonical_form",
    "check_corollary3",
    "check_theorem1",
    "check_theorem4",
    "circumference",
    "connected_canonical_forms",
    "cycle_at_least",
    "cycle_graph",
    "distance_matrix",
    "distance_to_subgraph",
    "eccentricity",
    "enumerate_connected",
    "extremal_graph",
    "find_geodesic_cycle",
    "from_edges",
    "graphs_from_lines",
    "is_connected",
    "is_geodesic_cycle",
    "longest_geodesic_cycle",
    "metric_profile",
    "minimal_order_search",
    "multi_sun",
    "parse_graph6",
    "permute",
    "read_graph6_stream",
    "sun_graph",
    "tightness_witness",
    "to_graph6",
    "verify_range",
    "worker_count",
]
