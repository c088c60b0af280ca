"""Segment-automata draw strategy for single-row boards with k >= 3.

The strategist's pieces are written X and the opponent's O. Because X can
never connect across an O, every O piece (and each board wall) acts as
filler that splits the row into independent segments. A segment is
classified by the X runs touching its filler edges:

    A  F....F      no X at either edge
    B  FX...F      one X at one edge
    C  FX..XF      an X at both edges
    D  FXX..F      two X at one edge
    E  FXX.XF      two X at one edge, one at the other

Subscripts count the empty cells. Odd C/D/E segments are the dangerous
ones: forced to play there, X may have to connect three. The two play
modes below keep X out of them forever.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from ..core import GameState, Player
from .errors import NoSafeMove, NonCanonical, NotApplicable

EMPTY = "-"


class SegmentKind(Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    E = "E"


# (low X-run, high X-run) at the two edges, orientation folded out.
_KIND_BY_RUNS = {
    (0, 0): SegmentKind.A,
    (0, 1): SegmentKind.B,
    (1, 1): SegmentKind.C,
    (0, 2): SegmentKind.D,
    (1, 2): SegmentKind.E,
}


@dataclass(frozen=True)
class Segment:
    """One canonical sub-board: columns lo..hi between filler."""

    kind: SegmentKind
    empties: int
    lo: int
    hi: int
    left_run: int  # X pieces touching the left filler
    right_run: int

    @property
    def parity(self) -> str:
        return "odd" if self.empties % 2 == 1 else "even"

    @property
    def label(self) -> str:
        return f"{self.kind.value}_{self.empties}"

    def play_column(self) -> int:
        """The strategy's column inside this segment (lowest index wherever
        the rules allow a choice)."""
        kind = self.kind
        if kind is SegmentKind.A:
            return self.lo  # A -> B: next to either filler edge
        if kind is SegmentKind.B:
            # B -> C: the empty edge, opposite the lone X
            return self.hi if self.left_run == 1 else self.lo
        if kind is SegmentKind.D:
            # D -> E: the edge away from the XX run
            return self.hi if self.left_run == 2 else self.lo
        if kind is SegmentKind.C:
            return self.lo + 1  # C -> E: beside a lone-X edge
        raise NoSafeMove("no play is defined inside an E segment")


def classify_segment(cells: str, lo: int = 0) -> Segment:
    """Classify one filler-bounded interval of X and empty cells."""
    if not cells or EMPTY not in cells:
        raise NonCanonical(f"interval {cells!r} has no playable space")
    left_run = 0
    while left_run < len(cells) and cells[left_run] == "X":
        left_run += 1
    right_run = 0
    while right_run < len(cells) - left_run and cells[-1 - right_run] == "X":
        right_run += 1
    middle = cells[left_run : len(cells) - right_run]
    if middle and set(middle) != {EMPTY}:
        raise NonCanonical(f"interval {cells!r} holds an interior X")
    kind = _KIND_BY_RUNS.get(tuple(sorted((left_run, right_run))))
    if kind is None:
        raise NonCanonical(f"edge runs {left_run},{right_run} in {cells!r} are not canonical")
    return Segment(
        kind=kind,
        empties=len(middle),
        lo=lo,
        hi=lo + len(cells) - 1,
        left_run=left_run,
        right_run=right_run,
    )


def split_segments(row: str) -> list[Segment]:
    """Split a strategist-as-X row at O pieces and walls; intervals without
    playable space merge into filler and are dropped."""
    segments = []
    col = 0
    w = len(row)
    while col < w:
        if row[col] == "O":
            col += 1
            continue
        lo = col
        while col < w and row[col] != "O":
            col += 1
        cells = row[lo:col]
        if EMPTY in cells:
            segments.append(classify_segment(cells, lo))
    return segments


_ODD_SAFE = {(SegmentKind.A, "odd"), (SegmentKind.B, "odd")}
_EVEN_PRIORITIES = (
    {(SegmentKind.D, "even")},
    {(SegmentKind.A, "even"), (SegmentKind.A, "odd"), (SegmentKind.B, "odd")},
    {(SegmentKind.B, "even"), (SegmentKind.C, "even")},
)


def automata_move(segments: list[Segment], parity: str) -> tuple[int, int]:
    """(segment index, column) chosen under the given play mode.

    Odd mode plays any odd A or B. Even mode plays by priority: even D
    first (denying the opponent its use), then harmless segments, then the
    danger-creating even B or C.
    """
    if parity == "odd":
        for i, seg in enumerate(segments):
            if (seg.kind, seg.parity) in _ODD_SAFE:
                return i, seg.play_column()
        raise NoSafeMove("no odd A or B segment available")
    if parity != "even":
        raise ValueError(f"parity must be 'odd' or 'even', got {parity!r}")
    for tier in _EVEN_PRIORITIES:
        for i, seg in enumerate(segments):
            if (seg.kind, seg.parity) in tier:
                return i, seg.play_column()
    raise NoSafeMove("no segment matches any even-mode priority")


def live_parity(state: GameState) -> str:
    """Play mode for the side to move: odd iff the empty-cell count is odd.
    The parity at the strategist's turns never changes during a game."""
    w, h = state.spec.require_finite()
    empties = w * h - state.move_count
    return "odd" if empties % 2 == 1 else "even"


def strategist_row(state: GameState, strategist: Player) -> str:
    """Bottom row rendered with the strategist's pieces as X."""
    out = []
    for column in state.columns:
        if not column:
            out.append(EMPTY)
        else:
            out.append("X" if column[0] is strategist else "O")
    return "".join(out)


def automata_strategy_move(state: GameState) -> int:
    """Full-game wrapper: classify the current row and play the mode move."""
    w, h = state.spec.require_finite()
    if h != 1:
        raise NotApplicable("automata strategy covers height-1 boards only")
    row = strategist_row(state, state.to_move)
    segments = split_segments(row)
    _, col = automata_move(segments, live_parity(state))
    return col
