"""
Game engine package
"""
from .models import GameState, Move, Player, Transcript, TranscriptEntry
from .engine import apply_move, legal_moves, terminal_winner
from .solver import GameSolver, best_move, solve
from .play import play

__all__ = [
    "GameState",
    "Move",
    "Player",
    "Transcript",
    "TranscriptEntry",
    "apply_move",
    "legal_moves",
    "terminal_winner",
    "GameSolver",
    "best_move",
    "solve",
    "play"
]
