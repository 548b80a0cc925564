"""
Element Selecting Game package
"""
from .game import ESGInstance, ESGState, Picker, completed, solve_esg
from .builder import JRule, build_esg, build_from_view
from .equivalence import EquivalenceReport, consistent_rules, select_j_rule, verify_equivalence
from .io import format_esg_text, parse_esg_text, read_esg

__all__ = [
    "ESGInstance",
    "ESGState",
    "Picker",
    "completed",
    "solve_esg",
    "JRule",
    "build_esg",
    "build_from_view",
    "EquivalenceReport",
    "consistent_rules",
    "select_j_rule",
    "verify_equivalence",
    "format_esg_text",
    "parse_esg_text",
    "read_esg"
]
