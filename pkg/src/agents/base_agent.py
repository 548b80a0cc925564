"""
Base Agent class for all game strategies
"""
from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional

from ..game.engine import legal_moves
from ..game.models import GameState, Move
from ..graphs.graph import Graph


class BaseAgent(ABC):
    """
    Base class for all strategies

    An agent is a choice function from non-terminal states to legal moves.
    Agents are callable, so they can be handed to play() and
    GameSolver.solve_against() wherever a plain strategy function is accepted.
    """

    def __init__(self, name: str, description: str):
        self.name = name
        self.description = description
        self.memory: Dict[str, Any] = {}

    @abstractmethod
    def choose_move(self, graph: Graph, state: GameState) -> Move:
        """
        Pick a move for the player to move in state
        """
        pass

    def start_game(self, graph: Graph, state: GameState):
        """Called once with the starting state before play() or solve_against() begin"""
        pass

    def __call__(self, graph: Graph, state: GameState) -> Move:
        return self.choose_move(graph, state)

    def options(self, graph: Graph, state: GameState) -> List[Move]:
        """Legal moves in ascending order"""
        return legal_moves(graph, state)

    def store_memory(self, key: str, value: Any):
        """Store information in agent memory"""
        self.memory[key] = value

    def retrieve_memory(self, key: str) -> Optional[Any]:
        """Retrieve information from agent memory"""
        return self.memory.get(key)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(name={self.name!r})"
