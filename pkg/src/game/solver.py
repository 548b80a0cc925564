"""
Exact solver for the Two-Player Pebbling Game

Every move removes one pebble, so the game tree is a finite DAG. The solver
runs memoized minimax over states keyed by (config, turn, forbidden).
"""
import logging
import sys
from collections import defaultdict
from typing import Callable, Dict, List, Optional, Tuple

from .engine import apply_move, legal_moves, terminal_winner
from .models import GameState, Move, Player
from .play import start_strategy
from ..config.settings import settings
from ..graphs.graph import Configuration, Graph
from ..utils.errors import MissingRootError, StrategyFault, TerminalStateError

logger = logging.getLogger(__name__)

StateKey = Tuple[Configuration, bool, Optional[Tuple[int, int]]]
Strategy = Callable[[Graph, GameState], Move]


class GameSolver:
    """
    Memoized minimax solver bound to one rooted graph

    The transposition table lives on the instance, so a solver can be reused
    across every configuration of a sweep. Use one instance per worker.
    """

    def __init__(self, graph: Graph, move_ordering: Optional[bool] = None):
        if graph.root is None:
            raise MissingRootError("the solver needs a rooted graph")
        self.graph = graph
        self.root = graph.root
        self._table: Dict[StateKey, bool] = {}
        self._fixed_tables: Dict[object, Dict[StateKey, bool]] = {}
        self.stats: Dict[str, int] = defaultdict(int)

        ordering = settings.solver.move_ordering if move_ordering is None else move_ordering
        dist = graph.distances_to(self.root)
        # Mover tries targets nearest the root first, Defender the farthest first
        if ordering:
            self._mover_nbrs = tuple(
                tuple(sorted(graph.adjacency[u], key=lambda v: (dist[v], v))) for u in range(graph.n)
            )
            self._defender_nbrs = tuple(
                tuple(sorted(graph.adjacency[u], key=lambda v: (-dist[v], v))) for u in range(graph.n)
            )
        else:
            plain = tuple(tuple(sorted(graph.adjacency[u])) for u in range(graph.n))
            self._mover_nbrs = plain
            self._defender_nbrs = plain

        if sys.getrecursionlimit() < settings.solver.recursion_limit:
            sys.setrecursionlimit(settings.solver.recursion_limit)

    @property
    def table_size(self) -> int:
        return len(self._table)

    def clear(self) -> None:
        self._table.clear()
        self._fixed_tables.clear()

    def solve(self, state: GameState) -> Player:
        """
        Winner of state under optimal play

        Args:
            state: Any valid state on the solver's graph

        Returns:
            Player holding a winning strategy
        """
        return Player.MOVER if self.mover_wins(state.config, state.turn is Player.MOVER, state.forbidden) else Player.DEFENDER

    def solve_config(self, config: Configuration) -> Player:
        """Winner with Mover to move first on config"""
        return Player.MOVER if self.mover_wins(tuple(config), True, None) else Player.DEFENDER

    def mover_wins(self, config: Configuration, mover_turn: bool, forbidden: Optional[Tuple[int, int]]) -> bool:
        key = (config, mover_turn, forbidden)
        cached = self._table.get(key)
        if cached is not None:
            self.stats["hits"] += 1
            return cached
        self.stats["misses"] += 1

        if config[self.root] > 0:
            result = True
        else:
            result = self._expand(config, mover_turn, forbidden)
        self._table[key] = result
        return result

    def _expand(self, config: Configuration, mover_turn: bool, forbidden: Optional[Tuple[int, int]]) -> bool:
        nbrs = self._mover_nbrs if mover_turn else self._defender_nbrs
        root = self.root
        any_move = False
        for u, count in enumerate(config):
            if count < 2:
                continue
            for v in nbrs[u]:
                if not mover_turn and forbidden == (u, v):
                    continue
                any_move = True
                if v == root:
                    child = True
                else:
                    counts = list(config)
                    counts[u] -= 2
                    counts[v] += 1
                    child = self.mover_wins(tuple(counts), not mover_turn, (v, u) if mover_turn else None)
                if mover_turn and child:
                    return True
                if not mover_turn and not child:
                    return False
        if not any_move:
            return False
        # Mover found no winning move, or every Defender move loses
        return not mover_turn

    def best_move(self, state: GameState) -> Move:
        """
        A move that keeps the solve() value for the player to move

        Ties are broken by ascending (source, target) order. In a lost
        position the first legal move is returned.

        Raises:
            TerminalStateError: state has a pebbled root or no legal move
        """
        if terminal_winner(self.graph, state) is not None:
            raise TerminalStateError(f"no move to choose in terminal state {state.config}")
        moves = legal_moves(self.graph, state)
        player = state.turn
        for move in moves:
            if self.solve(apply_move(self.graph, state, move)) is player:
                return move
        return moves[0]

    def winning_moves(self, state: GameState) -> List[Move]:
        """Every move whose successor is still won by the player to move"""
        if terminal_winner(self.graph, state) is not None:
            return []
        return [
            m for m in legal_moves(self.graph, state)
            if self.solve(apply_move(self.graph, state, m)) is state.turn
        ]

    def solve_against(self, state: GameState, defender: Strategy) -> Player:
        """
        Winner when Mover searches every move and Defender follows a fixed strategy

        Args:
            state: Start state
            defender: Deterministic Defender strategy (graph, state) -> Move

        Returns:
            MOVER if some Mover line beats the strategy, else DEFENDER

        Raises:
            StrategyFault: the strategy answered with an illegal move
            UnsupportedConfigurationError: the strategy rejected the start state
        """
        start_strategy(defender, self.graph, state)
        table = self._fixed_tables.setdefault(defender, {})
        return Player.MOVER if self._fixed(state, defender, table) else Player.DEFENDER

    def _fixed(self, state: GameState, defender: Strategy, table: Dict[StateKey, bool]) -> bool:
        key = state.key
        cached = table.get(key)
        if cached is not None:
            return cached
        winner = terminal_winner(self.graph, state)
        if winner is not None:
            result = winner is Player.MOVER
        elif state.turn is Player.MOVER:
            result = any(
                self._fixed(apply_move(self.graph, state, m), defender, table)
                for m in legal_moves(self.graph, state)
            )
        else:
            move = defender(self.graph, state)
            if move not in legal_moves(self.graph, state):
                raise StrategyFault(Player.DEFENDER.value, state, move)
            result = self._fixed(apply_move(self.graph, state, move), defender, table)
        table[key] = result
        return result


def solve(graph: Graph, state: GameState) -> Player:
    """One-shot solve with a fresh transposition table"""
    return GameSolver(graph).solve(state)


def best_move(graph: Graph, state: GameState) -> Move:
    """One-shot move extraction with a fresh transposition table"""
    return GameSolver(graph).best_move(state)
