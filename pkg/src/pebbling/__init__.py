"""
Pebbling numbers package
"""
from .solvability import SolvabilitySearch, is_r_solvable, pi, pi_rooted
from .certificates import InfinityCertificate, check_cut_set, defender_cutset_strategy, infinity_certificate
from .eta import EtaKind, EtaResult, eta, eta_rooted, fixed_strategy_threshold

__all__ = [
    "SolvabilitySearch",
    "is_r_solvable",
    "pi",
    "pi_rooted",
    "InfinityCertificate",
    "check_cut_set",
    "defender_cutset_strategy",
    "infinity_certificate",
    "EtaKind",
    "EtaResult",
    "eta",
    "eta_rooted",
    "fixed_strategy_threshold"
]
