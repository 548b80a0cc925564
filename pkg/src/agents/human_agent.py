"""
Terminal prompt agent for interactive play
"""
from typing import Callable

from .base_agent import BaseAgent
from ..game.models import GameState, Move
from ..graphs.graph import Graph
from ..utils.errors import TerminalStateError


class HumanAgent(BaseAgent):
    """
    Asks a person for each move

    The reply may be the move's index in the printed list or "u v".
    Bad replies are reported and the prompt repeats.
    """

    def __init__(
        self,
        name: str = "human",
        input_fn: Callable[[str], str] = input,
        output_fn: Callable[[str], None] = print
    ):
        super().__init__(name, "Moves typed at a terminal prompt")
        self.input_fn = input_fn
        self.output_fn = output_fn

    def choose_move(self, graph: Graph, state: GameState) -> Move:
        moves = self.options(graph, state)
        if not moves:
            raise TerminalStateError(f"no legal move in {state.config}")

        self.output_fn(f"\nPebbles: {list(state.config)} (root {graph.root})")
        if state.forbidden:
            self.output_fn(f"Not allowed this turn: {state.forbidden[0]}->{state.forbidden[1]}")
        for i, move in enumerate(moves):
            self.output_fn(f"  [{i}] {move}")

        while True:
            reply = self.input_fn(f"{state.turn.value} move> ").strip()
            move = self._parse(reply, moves)
            if move is not None:
                return move
            self.output_fn(f"'{reply}' is not one of the listed moves")

    @staticmethod
    def _parse(reply: str, moves: list):
        parts = reply.replace("->", " ").split()
        try:
            if len(parts) == 1:
                index = int(parts[0])
                return moves[index] if 0 <= index < len(moves) else None
            if len(parts) == 2:
                move = Move(int(parts[0]), int(parts[1]))
                return move if move in moves else None
        except ValueError:
            return None
        return None
