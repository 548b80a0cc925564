"""
Seeded random agent
"""
import random
from typing import Optional

from .base_agent import BaseAgent
from ..game.models import GameState, Move
from ..graphs.graph import Graph
from ..utils.errors import TerminalStateError


class RandomAgent(BaseAgent):
    """Uniformly random legal move; the same seed replays the same game"""

    def __init__(self, seed: Optional[int] = 0, name: str = "random"):
        super().__init__(name, f"Uniform random legal move (seed={seed})")
        self.seed = seed
        self._rng = random.Random(seed)

    def reset(self):
        self._rng = random.Random(self.seed)

    def choose_move(self, graph: Graph, state: GameState) -> Move:
        moves = self.options(graph, state)
        if not moves:
            raise TerminalStateError(f"no legal move in {state.config}")
        return self._rng.choice(moves)
