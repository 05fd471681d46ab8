"""cliquekit: exact clique polynomials, clique incidence matrices, identity
verification, and conjecture fuzzing for graphs on up to 64 vertices."""

from .graphs import (
    Graph,
    EdgeRef,
    GraphFormatError,
    RngSpec,
    Splitmix64,
    bits,
    common_neighborhood,
    common_neighborhood_bits,
    complete_graph,
    cycle_graph,
    delete_edge,
    delete_edge_set,
    delete_vertex,
    disjoint_union,
    edge,
    empty_graph,
    induced_subgraph,
    is_connected,
    neighborhood_subgraph,
    parse_edge_list,
    parse_graph6,
    path_graph,
    random_gnp,
    star_graph,
    to_graph6,
    triangle_graph,
    triangles,
)
from .cliques import (
    Clique,
    CliqueCatalog,
    Polynomial,
    brute_force_counts,
    clique_count,
    clique_counts,
    clique_polynomial,
    clique_value,
    enumerate_cliques,
    is_clique,
    poly_add,
    poly_derivative,
    poly_divided_derivative,
    poly_equal,
    poly_normalize,
    poly_reverse,
    poly_scale,
    poly_shift,
    poly_sub,
    poly_sum,
)
from .incidence import (
    IncidenceMatrix,
    double_count,
    edge_deck_matrix,
    subclique_superclique_matrix,
    triangle_deck_matrix,
    vertex_deck_matrix,
)
from .identities import (
    IdentityReport,
    TriangleDeletionCounts,
    TriangleIdentityParts,
    check_edge_deck_identity,
    check_edge_recurrence,
    check_first_derivative,
    check_handshake,
    check_kth_derivative_general,
    check_second_derivative,
    check_third_derivative_k5free,
    check_triangle_recurrence,
    check_vertex_deck_identity,
    check_vertex_recurrence,
    clique_deletion_expansion,
    triangle_deletion_counts,
    triangle_identity,
)
from .conjectures import (
    ALL_THEOREMS,
    CHECKS,
    CampaignConfig,
    CampaignReport,
    CheckTally,
    Counterexample,
    ShrunkForm,
    check_conjecture1,
    check_conjecture2,
    check_conjecture3,
    check_triangle_deck_identity,
    replay_counterexample,
    resolve_checks,
    run_campaign,
    shrink_counterexample,
)

__version__ = "0.1.0"
