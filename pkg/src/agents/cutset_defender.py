"""
Cut-set Defender

Defender strategy that keeps every pebble out of the root component G_0 of
an infinity certificate. It works from any starting configuration with no
pebbles on G_0 ∪ S:

- a second pebble on a cut vertex v is moved at once to N(v) - (G_0 ∪ S)
- otherwise Defender moves somewhere outside S ∪ G_0

so at Mover's turn every cut vertex holds at most one pebble and nobody can
ever pebble from S into G_0.
"""
import logging
from typing import FrozenSet, Iterable, List, Optional

from .base_agent import BaseAgent
from ..game.models import GameState, Move, Player
from ..graphs.graph import Configuration, Graph
from ..utils.errors import TerminalStateError, UnsupportedConfigurationError

logger = logging.getLogger(__name__)


class CutSetDefender(BaseAgent):
    """
    Defender playing the cut-set strategy of an infinity certificate

    Args:
        cut_set: The certificate's cut set S
        root_component: Vertices of the component G_0 of G - S holding the root
    """

    def __init__(self, cut_set: Iterable[int], root_component: Iterable[int], name: str = "cut-set defender"):
        super().__init__(name, "Keeps pebbles off the root side of a certified cut set")
        self.cut_set: FrozenSet[int] = frozenset(cut_set)
        self.root_component: FrozenSet[int] = frozenset(root_component)
        self.blocked = self.cut_set | self.root_component

    @classmethod
    def from_certificate(cls, certificate) -> "CutSetDefender":
        return cls(certificate.cut_set, certificate.root_component)

    def supports(self, config: Configuration) -> bool:
        """True when config lies in the supported family: no pebbles on G_0 ∪ S"""
        return all(config[v] == 0 for v in self.blocked)

    def require_supported(self, config: Configuration):
        if not self.supports(config):
            raise UnsupportedConfigurationError(
                f"configuration {tuple(config)} has pebbles on the root component or the cut set"
            )

    def start_game(self, graph: Graph, state: GameState):
        self.require_supported(state.config)

    def choose_move(self, graph: Graph, state: GameState) -> Move:
        if state.turn is not Player.DEFENDER:
            raise UnsupportedConfigurationError("the cut-set strategy only plays Defender")
        config = state.config
        if any(config[v] > 0 for v in self.root_component):
            raise UnsupportedConfigurationError(
                f"configuration {config} has pebbles on the root component"
            )
        moves = self.options(graph, state)
        if not moves:
            raise TerminalStateError(f"no legal move in {config}")

        move = self._clear_cut_vertex(moves) or self._stay_outside(moves)
        if move is None:
            move = self._onto_empty_cut_vertex(moves, config)
        if move is None:
            logger.warning(f"cut-set strategy has no safe move in {config}; playing {moves[0]}")
            move = moves[0]
        return move

    def _clear_cut_vertex(self, moves: List[Move]) -> Optional[Move]:
        for move in moves:
            if move.source in self.cut_set and move.target not in self.blocked:
                return move
        return None

    def _stay_outside(self, moves: List[Move]) -> Optional[Move]:
        for move in moves:
            if move.source not in self.cut_set and move.target not in self.blocked:
                return move
        return None

    def _onto_empty_cut_vertex(self, moves: List[Move], config: Configuration) -> Optional[Move]:
        for move in moves:
            if move.target in self.cut_set and config[move.target] == 0:
                return move
        return None
