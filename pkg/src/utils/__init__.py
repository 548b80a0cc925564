"""
Utils Package
"""
from .helpers import (
    dumps_json,
    to_jsonable,
    write_json,
    write_jsonl
)
from .errors import (
    BudgetExceededError,
    IllegalMoveError,
    InvalidGraphError,
    MalformedInputError,
    MissingRootError,
    OutOfScopeError,
    PebblingError,
    StrategyFault,
    TerminalStateError,
    UnsupportedConfigurationError
)
from .logging_helper import configure_logging

__all__ = [
    "dumps_json",
    "to_jsonable",
    "write_json",
    "write_jsonl",
    "BudgetExceededError",
    "IllegalMoveError",
    "InvalidGraphError",
    "MalformedInputError",
    "MissingRootError",
    "OutOfScopeError",
    "PebblingError",
    "StrategyFault",
    "TerminalStateError",
    "UnsupportedConfigurationError",
    "configure_logging"
]
