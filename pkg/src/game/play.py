"""
Strategy-versus-strategy simulation
"""
import logging
from typing import Callable

from .engine import apply_move, legal_moves, terminal_winner
from .models import GameState, Move, Player, Transcript, TranscriptEntry
from ..graphs.graph import Graph
from ..utils.errors import StrategyFault

logger = logging.getLogger(__name__)

Strategy = Callable[[Graph, GameState], Move]


def start_strategy(strategy: Strategy, graph: Graph, start: GameState):
    """Let a strategy with a start_game hook check the starting position"""
    hook = getattr(strategy, "start_game", None)
    if hook is not None:
        hook(graph, start)


def play(graph: Graph, start: GameState, mover_strategy: Strategy, defender_strategy: Strategy) -> Transcript:
    """
    Run a game to termination

    Every move removes a pebble, so the game ends after at most
    size(start.config) moves.

    Args:
        graph: Rooted graph
        start: Initial state
        mover_strategy: Callable (graph, state) -> Move, or an agent
        defender_strategy: Same, for Defender

    Returns:
        Transcript with every move and the winner

    Raises:
        StrategyFault: a strategy returned a move outside legal_moves
        UnsupportedConfigurationError: a strategy rejected the start state
    """
    start_strategy(mover_strategy, graph, start)
    start_strategy(defender_strategy, graph, start)
    transcript = Transcript(start=start)
    state = start
    winner = terminal_winner(graph, state)
    while winner is None:
        strategy = mover_strategy if state.turn is Player.MOVER else defender_strategy
        move = strategy(graph, state)
        if not isinstance(move, Move) or move not in legal_moves(graph, state):
            logger.warning(f"{state.turn.value} strategy played {move!r} in {state.config}")
            raise StrategyFault(state.turn.value, state, move)
        player = state.turn
        state = apply_move(graph, state, move)
        transcript.entries.append(TranscriptEntry(player, move, state.size))
        winner = terminal_winner(graph, state)

    transcript.winner = winner
    logger.debug(f"game over after {len(transcript.entries)} moves: {winner.value} wins")
    return transcript
