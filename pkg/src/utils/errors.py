"""
Exception hierarchy for the pebbling toolkit
"""
from typing import Any, Optional


class PebblingError(Exception):
    """Base class for every error raised by this package"""


class InvalidGraphError(PebblingError, ValueError):
    """Bad family parameters, invalid vertices or a disconnected graph"""


class MissingRootError(InvalidGraphError):
    """A game operation was asked of a graph without a root"""


class IllegalMoveError(PebblingError, ValueError):
    """A move that is not in legal_moves for the state"""


class TerminalStateError(PebblingError):
    """Move extraction was requested on a finished game"""


class StrategyFault(PebblingError):
    """A strategy answered with an illegal move during play"""

    def __init__(self, player: str, state: Any, move: Optional[Any], message: str = ""):
        self.player = player
        self.state = state
        self.move = move
        super().__init__(message or f"{player} strategy returned illegal move {move!r}")


class UnsupportedConfigurationError(PebblingError, ValueError):
    """Configuration outside the family an operation is defined on"""


class OutOfScopeError(PebblingError):
    """Parameters outside what the closed-form results cover"""


class MalformedInputError(PebblingError, ValueError):
    """A graph, configuration or ESG text file could not be parsed"""


class BudgetExceededError(PebblingError):
    """An eta sweep did not settle within its pebble budget"""

    def __init__(self, budget: int, message: str = ""):
        self.budget = budget
        super().__init__(message or f"eta not determined within budget {budget}")
