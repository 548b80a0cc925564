"""
Greedy agent: the obvious distance-driven strategy
"""
from typing import Dict, Tuple

from .base_agent import BaseAgent
from ..game.models import GameState, Move, Player
from ..graphs.graph import Graph
from ..utils.errors import TerminalStateError


class GreedyAgent(BaseAgent):
    """
    Moves a pebble as close to the root as possible when playing Mover,
    and as far from it as possible when playing Defender

    Ties go to the first move in ascending (source, target) order.
    """

    def __init__(self, name: str = "greedy"):
        super().__init__(name, "Closest-to-root target for Mover, farthest for Defender")
        self._distances: Dict[Graph, Tuple[int, ...]] = {}

    def _dist(self, graph: Graph) -> Tuple[int, ...]:
        if graph not in self._distances:
            self._distances[graph] = graph.distances_to(graph.root)
        return self._distances[graph]

    def choose_move(self, graph: Graph, state: GameState) -> Move:
        moves = self.options(graph, state)
        if not moves:
            raise TerminalStateError(f"no legal move in {state.config}")
        dist = self._dist(graph)
        if state.turn is Player.MOVER:
            return min(moves, key=lambda m: (dist[m.target], m))
        return min(moves, key=lambda m: (-dist[m.target], m))
