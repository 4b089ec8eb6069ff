"""Exact and Monte Carlo computation of the Myerson value.

Thin re-export of the compiled extension. Coalitions are plain integers
interpreted as bit masks over node indices (bit v set <=> node v present).
"""

from ._core import (
    Allocation,
    CharacteristicFunction,
    Graph,
    alpha_connected,
    approx_connected,
    approx_hybrid,
    approx_permutations,
    bench_scale_free_csv,
    components,
    connected_coalitions,
    count_connected_coalitions,
    custom_game,
    generate_game,
    is_connected,
    l1_error,
    load_game,
    make_barabasi_albert,
    make_cycle,
    make_erdos_renyi,
    make_star,
    marginal_contribution,
    myerson_exact_connected,
    myerson_exact_subsets,
    neighbors,
    parse_graph,
    range_estimate,
    restrict_to_graph,
    samples_required,
    serialize_graph,
    shapley_subsets,
    store_game_table,
)

__all__ = [
    "Allocation",
    "CharacteristicFunction",
    "Graph",
    "alpha_connected",
    "approx_connected",
    "approx_hybrid",
    "approx_permutations",
    "bench_scale_free_csv",
    "components",
    "connected_coalitions",
    "count_connected_coalitions",
    "custom_game",
    "generate_game",
    "is_connected",
    "l1_error",
    "load_game",
    "make_barabasi_albert",
    "make_cycle",
    "make_erdos_renyi",
    "make_star",
    "marginal_contribution",
    "myerson_exact_connected",
    "myerson_exact_subsets",
    "neighbors",
    "parse_graph",
    "range_estimate",
    "restrict_to_graph",
    "samples_required",
    "serialize_graph",
    "shapley_subsets",
    "store_game_table",
]
