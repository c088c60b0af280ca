"""Two-rule pair strategy for single-row boards with k >= 3.

Columns are paired left to right (0 with 1, 2 with 3, ...); an odd board
keeps its rightmost column as an unpaired singleton. The strategy:

1. take-other: if the opponent holds one half of a pair whose other half
   is empty, fill that half;
2. rightmost: otherwise play the rightmost empty column.

Every final board it produces has one piece of each player in every pair,
so no same-player run can exceed two cells.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BoardFull

EMPTY = "-"


@dataclass(frozen=True)
class PairLabeling:
    """Fixed left-to-right pairing of columns, set once per game."""

    width: int
    pair_of: tuple[int | None, ...]
    singleton: int | None

    @classmethod
    def for_width(cls, width: int) -> "PairLabeling":
        if width < 1:
            raise ValueError("width must be >= 1")
        pair_of = [c // 2 for c in range(width)]
        singleton = None
        if width % 2 == 1:
            singleton = width - 1
            pair_of[-1] = None
        return cls(width, tuple(pair_of), singleton)

    @property
    def pair_count(self) -> int:
        return self.width // 2

    def partner(self, col: int) -> int | None:
        if self.pair_of[col] is None:
            return None
        return col + 1 if col % 2 == 0 else col - 1


def pair_move(row: str, labeling: PairLabeling, mover: str) -> int:
    """Column the two-rule strategy plays for `mover` ('X' or 'O') on the
    rendered single-row position `row`."""
    if len(row) != labeling.width:
        raise ValueError(f"row width {len(row)} != labeling width {labeling.width}")
    opponent = "O" if mover == "X" else "X"
    for pid in range(labeling.pair_count):
        a, b = 2 * pid, 2 * pid + 1
        if row[a] == opponent and row[b] == EMPTY:
            return b
        if row[b] == opponent and row[a] == EMPTY:
            return a
    for col in range(labeling.width - 1, -1, -1):
        if row[col] == EMPTY:
            return col
    raise BoardFull("no empty column remains")


def is_pair_balanced(row: str, labeling: PairLabeling) -> bool:
    """True iff every pair holds exactly one X and one O (singleton ignored)."""
    for pid in range(labeling.pair_count):
        pair = {row[2 * pid], row[2 * pid + 1]}
        if pair != {"X", "O"}:
            return False
    return True
