"""Misère connect-k: rules, closed-form oracle, constructive strategies,
an exhaustive solver, and machine-checked verification of the guarantees."""

from .core import (
    INFINITE,
    BoardSpec,
    GameState,
    IllegalMove,
    InfiniteUnsupported,
    InvalidSpec,
    Outcome,
    Player,
    RulesError,
    new_game,
    replay,
)
from .oracle import ConfigOutcome, outcome

__all__ = [
    "INFINITE",
    "BoardSpec",
    "ConfigOutcome",
    "GameState",
    "IllegalMove",
    "InfiniteUnsupported",
    "InvalidSpec",
    "Outcome",
    "Player",
    "RulesError",
    "new_game",
    "outcome",
    "replay",
]

__version__ = "0.1.0"
