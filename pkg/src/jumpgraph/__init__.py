"""Iterated jump-graph dynamics: operators, certificates, brute-force checks."""

from .graph_core import (
    Graph,
    INFINITE,
    VertexLimitError,
    complement,
    complete_bipartite,
    complete_graph,
    connected_components,
    cycle_graph,
    diameter,
    disjoint_union,
    edge_count_of_jump,
    from_graph6,
    is_connected,
    jump,
    line_graph,
    parse_graph,
    path_graph,
    petersen_graph,
    star_graph,
    strip_isolated,
    to_graph6,
    vertex_limit,
)
from .iso import SubgraphWitness, canonical_form, canonical_graph, find_subgraph, is_isomorphic, verify_subgraph
from .snipped import NamedGraph, SnippedWitness, find_snipped, named_graphs, net_graph, verify_snipped
from .classify import (
    Classification,
    UnresolvedError,
    IterateTooLargeError,
    catalog_membership,
    classify,
    dissipation_number,
    find_periodic,
    growth_check,
)
from .preimage import (
    DissipationTree,
    ForbiddenHit,
    build_dissipation_tree,
    has_jump_preimage,
    is_line_graph,
    jump_forbidden,
    jump_preimages,
    line_forbidden,
    line_graph_obstruction,
)
from .catalog import GraphCatalog, filter_catalog, generate, generate_by_edges, ingest

__version__ = "0.1.0"
