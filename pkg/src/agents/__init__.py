"""
Agents package initialization
"""
from .base_agent import BaseAgent
from .optimal_agent import OptimalAgent
from .random_agent import RandomAgent
from .greedy_agent import GreedyAgent
from .cutset_defender import CutSetDefender
from .human_agent import HumanAgent

__all__ = [
    "BaseAgent",
    "OptimalAgent",
    "RandomAgent",
    "GreedyAgent",
    "CutSetDefender",
    "HumanAgent"
]
