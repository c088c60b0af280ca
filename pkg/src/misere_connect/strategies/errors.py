"""Shared exception types for the strategy modules."""


class StrategyError(Exception):
    """Base class for strategy failures."""


class NotApplicable(StrategyError):
    """The strategy does not cover this board, seat, or turn."""


class Stuck(StrategyError):
    """The strategy's rule demands a move that does not exist. Reachable
    only if one of the verified claims is false; surfaced, never masked."""


class BoardFull(StrategyError):
    """No empty cell remains to play in."""


class EmptyBoard(StrategyError):
    """No piece has asserted a template yet."""


class LosingPlay(StrategyError):
    """The play sits next to the player's own piece and would connect."""


class NonCanonical(StrategyError):
    """A segment fell outside classes A-E: a closure violation."""


class NoSafeMove(StrategyError):
    """No segment admits an in-strategy play; must be unreachable."""
