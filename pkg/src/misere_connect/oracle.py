"""Closed-form game value for any misère connect-k configuration.

The value of the empty board depends on (w, h, k) only. The decision
procedure below branches, in order: infinite extents, narrow boards
(w < k for k >= 3), the k = 2 table, then the k >= 3 table.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import INFINITE, BoardSpec, Outcome

# Closed set of rule labels; exactly one fires per spec.
RULE_INFINITE = "infinite-extent"
RULE_NARROW = "width-below-k"
RULE_K2_H1_DRAW = "k2-height1-draw-width"
RULE_K2_H1_ODD = "k2-height1-odd-width"
RULE_K2_H1_EVEN = "k2-height1-even-width"
RULE_K2_SINGLE_COLUMN = "k2-single-column"
RULE_K2_TALL = "k2-taller-board"
RULE_H1_STRIP = "height1-strip"
RULE_EVEN_HEIGHT = "even-height"
RULE_ODD_HEIGHT_ODD_WIDTH = "odd-height-odd-width"
RULE_ODD_HEIGHT_EVEN_WIDTH = "odd-height-even-width"

ALL_RULES = frozenset(
    {
        RULE_INFINITE,
        RULE_NARROW,
        RULE_K2_H1_DRAW,
        RULE_K2_H1_ODD,
        RULE_K2_H1_EVEN,
        RULE_K2_SINGLE_COLUMN,
        RULE_K2_TALL,
        RULE_H1_STRIP,
        RULE_EVEN_HEIGHT,
        RULE_ODD_HEIGHT_ODD_WIDTH,
        RULE_ODD_HEIGHT_EVEN_WIDTH,
    }
)

K2_H1_DRAW_WIDTHS = frozenset({1, 2, 4, 6})


@dataclass(frozen=True)
class ConfigOutcome:
    spec: BoardSpec
    outcome: Outcome
    rule: str

    def describe(self) -> str:
        return f"{self.outcome.value} ({self.rule})"


def outcome(spec: BoardSpec) -> ConfigOutcome:
    """Game value of the empty board under optimal play by both sides."""
    w, h, k = spec.width, spec.height, spec.k

    if w is INFINITE or h is INFINITE:
        # Either player can always play far away (infinite width) or keep
        # stacking on the opponent's last piece (infinite height).
        return ConfigOutcome(spec, Outcome.DRAW, RULE_INFINITE)

    if k >= 3 and w < k:
        # Too narrow for horizontal or diagonal runs; stacking on the
        # opponent's last move avoids vertical ones.
        return ConfigOutcome(spec, Outcome.DRAW, RULE_NARROW)

    if k == 2:
        if h == 1:
            if w in K2_H1_DRAW_WIDTHS:
                return ConfigOutcome(spec, Outcome.DRAW, RULE_K2_H1_DRAW)
            if w % 2 == 1:
                return ConfigOutcome(spec, Outcome.P2_WIN, RULE_K2_H1_ODD)
            return ConfigOutcome(spec, Outcome.P2_WIN, RULE_K2_H1_EVEN)
        if w == 1:
            # Forced alternating stack; owners alternate, so nobody pairs up.
            return ConfigOutcome(spec, Outcome.DRAW, RULE_K2_SINGLE_COLUMN)
        return ConfigOutcome(spec, Outcome.P2_WIN, RULE_K2_TALL)

    # k >= 3, w >= k
    if h == 1:
        return ConfigOutcome(spec, Outcome.DRAW, RULE_H1_STRIP)
    if h % 2 == 0:
        return ConfigOutcome(spec, Outcome.P2_WIN, RULE_EVEN_HEIGHT)
    if w % 2 == 1:
        return ConfigOutcome(spec, Outcome.P1_WIN, RULE_ODD_HEIGHT_ODD_WIDTH)
    return ConfigOutcome(spec, Outcome.P2_WIN, RULE_ODD_HEIGHT_EVEN_WIDTH)
