"""Exact solvers for graph protection parameters on small graphs."""

from .eternal import (
    ALL_GUARDS,
    ONE_GUARD,
    DefenseStrategy,
    SafeFamily,
    eternal_domination_number,
    extract_strategy,
    m_eternal_domination_number,
    safe_family,
    transition_feasible,
)
from .graphs import (
    Graph,
    canonical_form,
    cartesian_product,
    corona,
    enumerate_nonisomorphic,
    enumerate_trees,
    from_edge_list,
    parse_graph6,
    to_graph6,
)
from .neocol import NeoColonization, bipartite_star_colonization, part_weight, theta_c
from .params import (
    ParamReport,
    clique_cover_number,
    connected_domination_number,
    domination_number,
    independence_number,
    vertex_cover_and_matching,
)
from .trees import build_by_k2_attachment, r2_reduces_to_small_star, reduce_tree, tree_clique_cover

__all__ = [
    "ALL_GUARDS",
    "ONE_GUARD",
    "DefenseStrategy",
    "Graph",
    "NeoColonization",
    "ParamReport",
    "SafeFamily",
    "bipartite_star_colonization",
    "build_by_k2_attachment",
    "canonical_form",
    "cartesian_product",
    "clique_cover_number",
    "connected_domination_number",
    "corona",
    "domination_number",
    "enumerate_nonisomorphic",
    "enumerate_trees",
    "eternal_domination_number",
    "extract_strategy",
    "from_edge_list",
    "independence_number",
    "m_eternal_domination_number",
    "parse_graph6",
    "part_weight",
    "r2_reduces_to_small_star",
    "reduce_tree",
    "safe_family",
    "theta_c",
    "to_graph6",
    "transition_feasible",
    "tree_clique_cover",
    "vertex_cover_and_matching",
]
