"""
G_{s,t} oracle package
"""
from .view import GstConfigView, nontrivial_configurations, view
from .formulas import (
    eta_gst_formula,
    eta_multipartite_formula,
    gin_g_witness,
    is_boundary,
    multipartite_boundary_winner,
    multipartite_max_over_roots
)
from .classifier import (
    ClassificationOutcome,
    Fallback,
    Rule,
    classify,
    closed_neighborhood_pebbled,
    esg_sets,
    four_pebble_defender_literal,
    four_pebble_defender_working,
    four_pebble_mover_condition,
    literal_clause_disagrees,
    multipartite_parts
)

__all__ = [
    "GstConfigView",
    "view",
    "nontrivial_configurations",
    "eta_gst_formula",
    "eta_multipartite_formula",
    "gin_g_witness",
    "is_boundary",
    "multipartite_boundary_winner",
    "multipartite_max_over_roots",
    "ClassificationOutcome",
    "Fallback",
    "Rule",
    "classify",
    "closed_neighborhood_pebbled",
    "esg_sets",
    "four_pebble_defender_literal",
    "four_pebble_defender_working",
    "four_pebble_mover_condition",
    "literal_clause_disagrees",
    "multipartite_parts"
]
