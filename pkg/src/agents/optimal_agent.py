"""
Optimal agent backed by the exact solver
"""
from typing import Dict

from .base_agent import BaseAgent
from ..game.models import GameState, Move
from ..game.solver import GameSolver
from ..graphs.graph import Graph


class OptimalAgent(BaseAgent):
    """Plays GameSolver.best_move, keeping one solver per graph"""

    def __init__(self, name: str = "optimal"):
        super().__init__(name, "Exact minimax play with ascending tie-break")
        self._solvers: Dict[Graph, GameSolver] = {}

    def solver_for(self, graph: Graph) -> GameSolver:
        solver = self._solvers.get(graph)
        if solver is None:
            solver = GameSolver(graph)
            self._solvers[graph] = solver
        return solver

    def choose_move(self, graph: Graph, state: GameState) -> Move:
        return self.solver_for(graph).best_move(state)
