"""
The Element Selecting Game

Mary and Dan alternately select distinct, previously unselected elements
of a universe U, Mary first in every round, for j rounds. Mary wins as
soon as some designated subset has every element selected, and wins
vacuously when a designated subset is empty. Dan wins if the rounds run
out first.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Any, Dict, FrozenSet, Hashable, Tuple

logger = logging.getLogger(__name__)


class Picker(Enum):
    """The two ESG players"""
    MARY = "mary"
    DAN = "dan"


@dataclass(frozen=True)
class ESGInstance:
    """Universe, designated subsets and round count"""
    universe: Tuple[Hashable, ...]
    sets: Tuple[FrozenSet[Hashable], ...]
    rounds: int

    def __post_init__(self):
        object.__setattr__(self, "universe", tuple(self.universe))
        object.__setattr__(self, "sets", tuple(frozenset(s) for s in self.sets))
        if len(set(self.universe)) != len(self.universe):
            raise ValueError("universe labels must be distinct")
        if self.rounds < 0:
            raise ValueError(f"rounds must be non-negative, got {self.rounds}")
        members = set(self.universe)
        for i, subset in enumerate(self.sets):
            if not subset <= members:
                raise ValueError(f"set {i} has elements outside the universe: {sorted(map(str, subset - members))}")

    @property
    def max_picks(self) -> int:
        """Picks until the rounds run out or U is exhausted"""
        return min(2 * self.rounds, len(self.universe))

    def with_rounds(self, rounds: int) -> "ESGInstance":
        return ESGInstance(self.universe, self.sets, rounds)

    def with_set(self, subset) -> "ESGInstance":
        return ESGInstance(self.universe, self.sets + (frozenset(subset),), self.rounds)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "universe": [str(u) for u in self.universe],
            "sets": [sorted(str(e) for e in s) for s in self.sets],
            "rounds": self.rounds
        }


@dataclass(frozen=True)
class ESGState:
    """Elements selected so far; the picker and rounds left follow from the count"""
    selected: FrozenSet[Hashable] = field(default_factory=frozenset)
    rounds: int = 0

    @property
    def picks(self) -> int:
        return len(self.selected)

    @property
    def next_picker(self) -> Picker:
        return Picker.MARY if self.picks % 2 == 0 else Picker.DAN

    @property
    def rounds_remaining(self) -> int:
        return self.rounds - self.picks // 2

    def select(self, element: Hashable) -> "ESGState":
        if element in self.selected:
            raise ValueError(f"{element!r} is already selected")
        return ESGState(self.selected | {element}, self.rounds)


def completed(instance: ESGInstance, selected: FrozenSet[Hashable]) -> bool:
    """Whether some designated subset is fully selected"""
    return any(s <= selected for s in instance.sets)


def solve_esg(instance: ESGInstance) -> Picker:
    """
    Exact minimax winner of an ESG instance

    Completion is checked after every single selection, so a pick by Dan
    that completes a set is still a Mary win.

    Args:
        instance: The game

    Returns:
        Picker.MARY or Picker.DAN
    """
    if any(not s for s in instance.sets):
        return Picker.MARY
    universe = frozenset(instance.universe)

    @lru_cache(maxsize=None)
    def mary_wins(state: ESGState) -> bool:
        if completed(instance, state.selected):
            return True
        if state.picks >= instance.max_picks:
            return False
        children = (mary_wins(state.select(e)) for e in universe - state.selected)
        if state.next_picker is Picker.MARY:
            return any(children)
        return all(children)

    winner = Picker.MARY if mary_wins(ESGState(rounds=instance.rounds)) else Picker.DAN
    logger.debug(f"ESG |U|={len(universe)} p={len(instance.sets)} j={instance.rounds}: {winner.value}")
    return winner
