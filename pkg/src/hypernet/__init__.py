"""Hypergraph analytics: duality, s-walks, simplicial structure and homology."""

from .core import (
    BicoloredGraph,
    BudgetExceededError,
    DuplicateLabelError,
    Hypergraph,
    HypergraphError,
    IncidenceMatrix,
    UnknownLabelError,
    adjacency,
    degree_sequence,
    disjoint_union,
    dual,
    edge_size_sequence,
    from_bicolored,
    from_set_system,
    incidence,
    incidence_matrix,
    to_bicolored,
)
from .homology import ChainComplex, GF2Matrix, betti_per_component, betti_sequence, chain_complex, gf2_rank
from .io import DatasetSummary, Histogram, ParseError, dataset_summary, parse, serialize, toplex_intersection_histogram
from .simplicial import (
    Graph,
    SimplicialComplex,
    asc_generate,
    clique_reconstruction,
    inclusiveness,
    k_section,
    k_skeleton,
    line_graph,
    same_hyperblock,
    simplify,
    toplexes,
    two_section_graph,
)
from .swalk import (
    EdgeTooSmallError,
    SComponentProfile,
    SLineGraph,
    max_diameter_component,
    s_betweenness,
    s_closeness,
    s_clustering_coefficient,
    s_component_profile,
    s_components,
    s_degree,
    s_diameter,
    s_distance,
    s_line_graph,
    vertex_s_degree,
)

__version__ = "0.1.0"
