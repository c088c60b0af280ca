"""Move-selection policies with proven guarantees, plus uniform dispatch.

Each strategy is a pure function of the game state; applicability is a
predicate over (board spec, seat). `auto_kind` picks the strategy whose
guarantee matches the oracle's value for a seat, or None when the seat has
no guarantee and the engine must fall back to search.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from ..core import BoardSpec, GameState, Outcome, Player
from ..oracle import outcome
from .automata import (
    Segment,
    SegmentKind,
    automata_move,
    automata_strategy_move,
    classify_segment,
    live_parity,
    split_segments,
    strategist_row,
)
from .errors import (
    BoardFull,
    EmptyBoard,
    LosingPlay,
    NoSafeMove,
    NonCanonical,
    NotApplicable,
    StrategyError,
    Stuck,
)
from .k2 import (
    P1_DRAW_WIDTHS,
    PlayClass,
    PlayTag,
    StretchTemplate,
    Tally,
    classify_play,
    in_template_moves,
    k2_move,
    tally_of,
    template_of,
)
from .pairs import PairLabeling, is_pair_balanced, pair_move
from .take_even import delayed_take_even_move, take_even_move

__all__ = [
    "BoardFull",
    "EmptyBoard",
    "LosingPlay",
    "NoSafeMove",
    "NonCanonical",
    "NotApplicable",
    "P1_DRAW_WIDTHS",
    "PairLabeling",
    "PlayClass",
    "PlayTag",
    "Segment",
    "SegmentKind",
    "StrategyError",
    "StrategyKind",
    "StrategyTag",
    "StretchTemplate",
    "Stuck",
    "Tally",
    "applicable",
    "auto_kind",
    "automata_move",
    "automata_strategy_move",
    "classify_play",
    "classify_segment",
    "declared_claim",
    "in_template_moves",
    "is_pair_balanced",
    "k2_move",
    "k2_strategy_move",
    "kind_for_name",
    "live_parity",
    "pair_move",
    "pair_strategy_move",
    "split_segments",
    "strategist_row",
    "strategy_move",
    "tally_of",
    "take_even_move",
    "delayed_take_even_move",
    "template_of",
]


class StrategyTag(Enum):
    TAKE_EVEN = "take-even"
    DELAYED_TAKE_EVEN = "delayed-take-even"
    PAIR = "pair"
    K2 = "k2"
    AUTOMATA_ODD = "automata-odd"
    AUTOMATA_EVEN = "automata-even"


@dataclass(frozen=True)
class StrategyKind:
    tag: StrategyTag
    seat: Player

    def __str__(self) -> str:
        return f"{self.tag.value}/{self.seat.name}"


def _automata_parity(spec: BoardSpec, seat: Player) -> str:
    """Empty-cell parity at the strategist's turns; fixed for a whole game."""
    cells = spec.cells - (0 if seat is Player.P1 else 1)
    return "odd" if cells % 2 == 1 else "even"


def applicable(kind: StrategyKind, spec: BoardSpec) -> bool:
    """True iff the strategy's guarantee covers this board and seat."""
    if not spec.is_finite:
        return False
    w, h, k = spec.width, spec.height, spec.k
    tag, seat = kind.tag, kind.seat
    if tag is StrategyTag.TAKE_EVEN:
        return h % 2 == 0 and w >= k and seat is Player.P2
    if tag is StrategyTag.DELAYED_TAKE_EVEN:
        if h % 2 != 1 or h < 3 or w < k:
            return False
        if k == 2:
            return seat is Player.P2
        return seat is (Player.P1 if w % 2 == 1 else Player.P2)
    if tag is StrategyTag.PAIR:
        return h == 1 and k >= 3
    if tag is StrategyTag.K2:
        if k != 2 or h != 1:
            return False
        return seat is Player.P2 or w in P1_DRAW_WIDTHS
    if tag in (StrategyTag.AUTOMATA_ODD, StrategyTag.AUTOMATA_EVEN):
        if h != 1 or k < 3:
            return False
        mode = "odd" if tag is StrategyTag.AUTOMATA_ODD else "even"
        return _automata_parity(spec, seat) == mode
    return False


def declared_claim(kind: StrategyKind, spec: BoardSpec) -> str | None:
    """The guarantee this strategy claims on this board, as a verifier claim
    name, or None when not applicable."""
    if not applicable(kind, spec):
        return None
    tag = kind.tag
    if tag in (StrategyTag.TAKE_EVEN, StrategyTag.DELAYED_TAKE_EVEN):
        return "AlwaysWins"
    if tag in (StrategyTag.PAIR, StrategyTag.AUTOMATA_ODD, StrategyTag.AUTOMATA_EVEN):
        return "NeverConnectsK"
    # k=2 template play: a win wherever the oracle says P2 wins, a draw on
    # the handful of drawn widths.
    if outcome(spec).outcome == Outcome.win_for(kind.seat):
        return "AlwaysWins"
    return "NeverLoses"


def pair_strategy_move(state: GameState) -> int:
    """Full-game wrapper for the two-rule pair strategy (h = 1)."""
    w, h = state.spec.require_finite()
    if h != 1:
        raise NotApplicable("pair strategy covers height-1 boards only")
    labeling = PairLabeling.for_width(w)
    return pair_move(state.row_text(0), labeling, state.to_move.symbol)


def k2_strategy_move(state: GameState) -> int:
    """Full-game wrapper for the k=2 template scripts (h = 1)."""
    _, h = state.spec.require_finite()
    if h != 1 or state.spec.k != 2:
        raise NotApplicable("k2 strategy covers k=2, height-1 boards only")
    return k2_move(state.row_text(0), state.to_move.symbol)


def strategy_move(kind: StrategyKind, state: GameState) -> int:
    """Uniform dispatch: the kind's deterministic move for the current state."""
    if state.to_move is not kind.seat:
        raise NotApplicable(f"{kind} is not on move")
    if not applicable(kind, state.spec):
        raise NotApplicable(f"{kind} does not cover {state.spec}")
    tag = kind.tag
    if tag is StrategyTag.TAKE_EVEN:
        return take_even_move(state)
    if tag is StrategyTag.DELAYED_TAKE_EVEN:
        return delayed_take_even_move(state)
    if tag is StrategyTag.PAIR:
        return pair_strategy_move(state)
    if tag is StrategyTag.K2:
        return k2_strategy_move(state)
    return automata_strategy_move(state)


def auto_kind(spec: BoardSpec, seat: Player) -> StrategyKind | None:
    """The guaranteed strategy for `seat` on `spec`, or None when the seat
    has no guarantee (the engine then plays from search)."""
    if not spec.is_finite:
        return None
    value = outcome(spec).outcome
    w, h, k = spec.width, spec.height, spec.k
    if value == Outcome.win_for(seat):
        if h % 2 == 0:
            return StrategyKind(StrategyTag.TAKE_EVEN, seat)
        if h == 1:
            return StrategyKind(StrategyTag.K2, seat)  # only k=2 wins exist at h=1
        return StrategyKind(StrategyTag.DELAYED_TAKE_EVEN, seat)
    if value is Outcome.DRAW:
        if h == 1 and k >= 3:
            return StrategyKind(StrategyTag.PAIR, seat)
        if h == 1 and k == 2 and (seat is Player.P2 or w in P1_DRAW_WIDTHS):
            return StrategyKind(StrategyTag.K2, seat)
    return None


_NAME_TO_TAG = {tag.value: tag for tag in StrategyTag}


def kind_for_name(name: str, spec: BoardSpec, seat: Player) -> StrategyKind | None:
    """Resolve a protocol strategy name for a seat. Returns None for the
    search fallback ('solver', or 'auto' with no guarantee). The plain
    'automata' name picks the mode matching the seat's turn parity."""
    if name == "solver":
        return None
    if name == "auto":
        return auto_kind(spec, seat)
    if name == "automata":
        mode = _automata_parity(spec, seat)
        tag = StrategyTag.AUTOMATA_ODD if mode == "odd" else StrategyTag.AUTOMATA_EVEN
        return StrategyKind(tag, seat)
    tag = _NAME_TO_TAG.get(name)
    if tag is None:
        raise ValueError(f"unknown strategy name {name!r}")
    return StrategyKind(tag, seat)
