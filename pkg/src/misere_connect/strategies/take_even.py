"""Take-even and delayed take-even strategies.

Take-even (even board height, second player): always stack on the
opponent's last move. The opponent only ever sees even column heights, so
they are confined to even 0-based rows and the strategist to odd ones;
no vertical or diagonal run can form for either side and the opponent runs
out of room first.

Delayed take-even (odd height >= 3): treat the board as row 0 plus an
even-height space above it. Answer a row-0 move with a safe row-0 move
(the pair strategy for k >= 3, the k=2 scripts for k = 2) and any higher
move by stacking on it. Whoever is forced into the upper space first
loses, which the row-0 parity decides: the strategist wins as P2 on even
widths and as P1 on odd widths (for k = 2, as P2 on every width > 1).
"""

from __future__ import annotations

from ..core import GameState, Player
from .errors import NotApplicable, Stuck
from .k2 import k2_move
from .pairs import PairLabeling, pair_move


def take_even_move(state: GameState) -> int:
    """Stack on the opponent's last move."""
    w, h = state.spec.require_finite()
    if h % 2 != 0:
        raise NotApplicable("take-even requires an even board height")
    if w < state.spec.k:
        raise NotApplicable("take-even requires width >= k")
    if state.to_move is not Player.P2:
        raise NotApplicable("take-even is played by the second player")
    if not state.history:
        raise NotApplicable("no opponent move to stack on")
    col = state.history[-1]
    if state.heights[col] >= h:
        raise Stuck(f"reply column {col} is full")  # impossible while h is even
    return col


def _row0_text(state: GameState) -> str:
    return state.row_text(0)


def _row0_move(state: GameState) -> int:
    mover = state.to_move
    if state.spec.k == 2:
        return k2_move(_row0_text(state), mover.symbol)
    labeling = PairLabeling.for_width(state.spec.width)
    return pair_move(_row0_text(state), labeling, mover.symbol)


def delayed_take_even_move(state: GameState) -> int:
    """Row-0 reply to a row-0 move, stack on anything higher."""
    w, h = state.spec.require_finite()
    k = state.spec.k
    if h % 2 != 1 or h < 3:
        raise NotApplicable("delayed take-even requires an odd height >= 3")
    if w < k:
        raise NotApplicable("delayed take-even requires width >= k")
    mover = state.to_move
    if k == 2:
        if mover is not Player.P2:
            raise NotApplicable("for k=2 only the second player has the guarantee")
    elif mover is not (Player.P1 if w % 2 == 1 else Player.P2):
        raise NotApplicable("seat must be P1 on odd widths, P2 on even widths")
    if not state.history:
        # Strategist opens (P1 on an odd width): the row-0 policy's opening.
        return _row0_move(state)
    last = state.history[-1]
    landed_row = state.heights[last] - 1
    if landed_row == 0:
        return _row0_move(state)
    if state.heights[last] >= h:
        raise Stuck(f"stack column {last} is full")  # impossible: opponent cannot reach row h-1
    return last
