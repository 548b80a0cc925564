"""
Two-Player Pebbling Game rules

Rule 1: Mover and Defender alternate mandatory pebbling moves, Mover first.
Rule 2: after Mover pebbles u -> v, Defender may not pebble v -> u.
Rule 3: a pebble on the root at any time is a Mover win.
Rule 4: with the root empty and no legal move left, Defender wins.
"""
from typing import List, Optional

from .models import GameState, Move, Player
from ..graphs.graph import Graph
from ..utils.errors import IllegalMoveError, MissingRootError


def _require_root(graph: Graph) -> int:
    if graph.root is None:
        raise MissingRootError("the game needs a rooted graph")
    return graph.root


def legal_moves(graph: Graph, state: GameState) -> List[Move]:
    """
    Moves available to the player to move, in ascending (source, target) order

    Args:
        graph: Rooted graph
        state: Current state

    Returns:
        Every u -> v with C(u) >= 2 and uv an edge, minus the Rule-2 reverse
        on Defender's turn
    """
    _require_root(graph)
    config = state.config
    moves = []
    for u in range(graph.n):
        if config[u] < 2:
            continue
        for v in sorted(graph.adjacency[u]):
            if state.forbidden == (u, v):
                continue
            moves.append(Move(u, v))
    return moves


def apply_move(graph: Graph, state: GameState, move: Move) -> GameState:
    """
    Play a legal move and hand the turn over

    Returns:
        Successor state; after a Mover move u -> v the successor forbids v -> u
    """
    if move not in legal_moves(graph, state):
        raise IllegalMoveError(f"{move} is not legal for {state.turn.value} in {state.config}")
    counts = list(state.config)
    counts[move.source] -= 2
    counts[move.target] += 1
    forbidden = (move.target, move.source) if state.turn is Player.MOVER else None
    return GameState(config=tuple(counts), turn=state.turn.other, forbidden=forbidden)


def terminal_winner(graph: Graph, state: GameState) -> Optional[Player]:
    """Mover if the root is pebbled, Defender if no legal move remains, else None"""
    root = _require_root(graph)
    if state.config[root] > 0:
        return Player.MOVER
    if not legal_moves(graph, state):
        return Player.DEFENDER
    return None
