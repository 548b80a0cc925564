"""
Game data models: players, moves, states and transcripts
"""
import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from ..graphs.graph import Configuration, configuration_size


class Player(Enum):
    """The two players; Mover moves first in every round"""
    MOVER = "mover"
    DEFENDER = "defender"

    @property
    def other(self) -> "Player":
        return Player.DEFENDER if self is Player.MOVER else Player.MOVER


@dataclass(frozen=True, order=True)
class Move:
    """A pebbling move: two pebbles leave source, one arrives at target"""
    source: int
    target: int

    def to_dict(self) -> Dict[str, int]:
        return {"from": self.source, "to": self.target}

    def __str__(self) -> str:
        return f"{self.source}->{self.target}"


@dataclass(frozen=True)
class GameState:
    """
    A node of the game tree

    forbidden = (v, u) means Defender may not pebble v -> u this turn; it is
    set only on Defender's turn, right after Mover pebbled u -> v.
    """
    config: Configuration
    turn: Player = Player.MOVER
    forbidden: Optional[Tuple[int, int]] = None

    def __post_init__(self):
        object.__setattr__(self, "config", tuple(self.config))
        if self.turn is Player.MOVER and self.forbidden is not None:
            raise ValueError("forbidden edge is only meaningful on Defender's turn")
        if any(c < 0 for c in self.config):
            raise ValueError("configuration counts must be non-negative")

    @classmethod
    def initial(cls, config: Configuration) -> "GameState":
        return cls(config=tuple(config), turn=Player.MOVER, forbidden=None)

    @property
    def size(self) -> int:
        return configuration_size(self.config)

    @property
    def key(self) -> Tuple[Configuration, bool, Optional[Tuple[int, int]]]:
        return (self.config, self.turn is Player.MOVER, self.forbidden)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "config": list(self.config),
            "turn": self.turn.value,
            "forbidden": list(self.forbidden) if self.forbidden else None
        }


@dataclass(frozen=True)
class TranscriptEntry:
    """One played move and the pebbles left after it"""
    player: Player
    move: Move
    remaining_pebbles: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "player": self.player.value,
            "from": self.move.source,
            "to": self.move.target,
            "remaining_pebbles": self.remaining_pebbles
        }


@dataclass
class Transcript:
    """Full record of a played game"""
    start: GameState
    entries: List[TranscriptEntry] = field(default_factory=list)
    winner: Optional[Player] = None

    @property
    def moves(self) -> List[Move]:
        return [e.move for e in self.entries]

    def to_jsonl(self) -> str:
        lines = [json.dumps(e.to_dict(), sort_keys=True) for e in self.entries]
        lines.append(json.dumps({"winner": self.winner.value if self.winner else None}, sort_keys=True))
        return "\n".join(lines) + "\n"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "start": self.start.to_dict(),
            "moves": [e.to_dict() for e in self.entries],
            "winner": self.winner.value if self.winner else None
        }
