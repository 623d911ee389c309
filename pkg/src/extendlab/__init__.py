"""Matching-extendability toolkit for small simple graphs."""

from .certificate import (
    Certificate,
    EdgeProfile,
    certify_all_edges,
    check_property_p,
    find_certificate,
    profile_edge,
    validate_certificate,
)
from .extendability import (
    ExtendabilityError,
    ExtendabilityVerdict,
    MinimalityVerdict,
    TheoremReport,
    is_k_extendable,
    is_minimal_k_extendable,
    theorem_suite,
    witness_scan,
)
from .graph import (
    ComponentSplit,
    Graph,
    GraphError,
    build_graph,
    component_split,
    induced_subgraph,
    is_bipartite,
    is_claw_free,
    is_connected,
    is_l_connected,
    min_degree,
)
from .graph6 import Graph6Error, emit_graph6, parse_graph6
from .matching import (
    Matching,
    enumerate_k_matchings,
    extends_to_perfect,
    has_perfect_matching,
    max_matching_size_in,
    maximum_matching,
)
from .search import (
    FilterSpec,
    SearchReport,
    conjecture_scan,
    enumerate_graphs,
    ingest_graph6,
    run_pipeline,
)

__version__ = "0.1.0"
