"""Spectral-extremal verification toolkit for planar graphs.

Constructs the relevant extremal graph families, decides freeness from
double-cycle and Theta patterns both structurally and by brute force,
computes certified spectral radii, and searches for maximum-radius graphs
at desk scale.
"""

from .families import (
    ForbiddenPattern,
    PathPartition,
    cll_pattern,
    cycle,
    enumerate_partitions,
    extremal_construction,
    h_partition,
    join_k2,
    k2_bipartite,
    k2_plus,
    path,
    realize_partition,
    theta_family,
    transform,
)
from .freeness import (
    AgreementReport,
    JoinDecomposition,
    c33_join_free_condition,
    cll_join_free_condition,
    condition_oracle_agreement,
    contains_subgraph,
    decompose_join,
    find_subgraph_embedding,
    is_cll_free,
    is_theta_free,
    join_free_condition,
    theta_join_free_condition,
)
from .graphs import (
    Graph,
    add_edge,
    connected_components,
    degree,
    disjoint_union,
    induced_subgraph,
    is_connected,
    new_graph,
    parse_graph6,
    remove_edge,
    to_graph6,
)
from .planarity import PlanarityResult, is_planar, planarity_check
from .search import (
    AscentReport,
    SearchReport,
    canonical_form,
    canonical_graph,
    enumerate_connected_graphs,
    exhaustive_search,
    family_search,
    verify_transformation_ascent,
)
from .spectral import (
    Comparison,
    PerronBoundsReport,
    SpectralResult,
    charpoly,
    charpoly_rho_oracle,
    compare_rho,
    eigen_residual,
    perron_bounds_report,
    rho_closed_k2n2,
    spectral_radius,
)

__version__ = "0.1.0"
