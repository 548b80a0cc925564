"""
Two-Player Pebbling Package
"""
from .agents import CutSetDefender, GreedyAgent, HumanAgent, OptimalAgent, RandomAgent
from .game import GameSolver, GameState, Move, Player, play, solve
from .graphs import GstDescriptor, Graph
from .pebbling import EtaKind, EtaResult, eta, eta_rooted, infinity_certificate, pi
from .gst import Rule, classify
from .esg import ESGInstance, solve_esg
from .verification import SuiteManager, SuiteOptions, VerificationReport
from .config import settings

__version__ = "1.0.0"

__all__ = [
    "CutSetDefender",
    "GreedyAgent",
    "HumanAgent",
    "OptimalAgent",
    "RandomAgent",
    "GameSolver",
    "GameState",
    "Move",
    "Player",
    "play",
    "solve",
    "GstDescriptor",
    "Graph",
    "EtaKind",
    "EtaResult",
    "eta",
    "eta_rooted",
    "infinity_certificate",
    "pi",
    "Rule",
    "classify",
    "ESGInstance",
    "solve_esg",
    "SuiteManager",
    "SuiteOptions",
    "VerificationReport",
    "settings"
]
