"""Template and tally machinery for k = 2 on single-row boards, plus the
second player's winning scripts and the tiny-width policy moves.

Once a piece lands, the only draw still compatible with it is the strictly
alternating completion of its stretch: the template. The tally counts, per
player, how many non-losing in-template moves remain; each of the four
canonical play classes shifts the tally by a fixed amount.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from enum import Enum

from .errors import BoardFull, EmptyBoard, LosingPlay, NotApplicable, Stuck

EMPTY = "-"
X, O = "X", "O"

P1_DRAW_WIDTHS = (1, 2, 4, 6)


def _other(player: str) -> str:
    return O if player == X else X


@dataclass(frozen=True)
class StretchTemplate:
    """Alternating prescription over one maximal empty stretch.

    `left`/`right` are the bounding (column, owner) pieces; None means the
    stretch meets the board wall on that side, which prescribes nothing.
    """

    lo: int
    hi: int
    left: tuple[int, str] | None
    right: tuple[int, str] | None

    def from_left(self, col: int) -> str | None:
        if self.left is None:
            return None
        acol, owner = self.left
        return owner if (col - acol) % 2 == 0 else _other(owner)

    def from_right(self, col: int) -> str | None:
        if self.right is None:
            return None
        acol, owner = self.right
        return owner if (acol - col) % 2 == 0 else _other(owner)

    def prescriptions(self, col: int) -> frozenset[str]:
        if not (self.lo <= col <= self.hi):
            raise ValueError(f"column {col} outside stretch {self.lo}..{self.hi}")
        out = set()
        for p in (self.from_left(col), self.from_right(col)):
            if p is not None:
                out.add(p)
        return frozenset(out)

    @property
    def consistent(self) -> bool:
        """True when the two bounding pieces assert the same template."""
        if self.left is None or self.right is None:
            return True
        rcol, rowner = self.right
        return self.from_left(rcol) == rowner


def template_of(row: str) -> list[StretchTemplate]:
    """Templates of every maximal empty stretch, left to right."""
    if X not in row and O not in row:
        raise EmptyBoard("no piece has asserted a template yet")
    w = len(row)
    stretches = []
    col = 0
    while col < w:
        if row[col] != EMPTY:
            col += 1
            continue
        lo = col
        while col < w and row[col] == EMPTY:
            col += 1
        hi = col - 1
        left = (lo - 1, row[lo - 1]) if lo > 0 else None
        right = (hi + 1, row[hi + 1]) if hi + 1 < w else None
        stretches.append(StretchTemplate(lo, hi, left, right))
    return stretches


@dataclass(frozen=True)
class Tally:
    """Remaining non-losing in-template moves (x_moves, o_moves)."""

    x_moves: int
    o_moves: int

    def as_tuple(self) -> tuple[int, int]:
        return (self.x_moves, self.o_moves)

    def __sub__(self, other: "Tally") -> tuple[int, int]:
        return (self.x_moves - other.x_moves, self.o_moves - other.o_moves)


def tally_of(row: str) -> Tally:
    return _tally_asserting(row, "left")


def _tally_asserting(row: str, side: str) -> Tally:
    """Tabulate the tally asserting one side's template per stretch. The
    result is side-independent; both sides exist so tests can check that."""
    if X not in row and O not in row:
        return Tally(0, 0)
    counts = {X: 0, O: 0}
    for st in template_of(row):
        use_left = st.left is not None if side == "left" else st.right is None
        if use_left:
            acol, aowner = st.left
            excl = st.right
        else:
            acol, aowner = st.right
            excl = st.left
        for col in range(st.lo, st.hi + 1):
            owner = aowner if (col - acol) % 2 == 0 else _other(aowner)
            counts[owner] += 1
        # In a contradictory stretch the cell next to the far piece is
        # prescribed that piece's own colour: playing it would connect.
        if excl is not None and not st.consistent:
            counts[excl[1]] -= 1
    return Tally(counts[X], counts[O])


class PlayTag(Enum):
    IN_TEMPLATE = "in-template"
    DOUBLE_CONTRADICTION = "double-contradiction"
    OFFENSIVE = "offensive"
    SELF_IMMOLATION = "self-immolation"


# Tally deltas from Table 2, stated for X's play; O's are mirrored.
_X_DELTAS = {
    PlayTag.IN_TEMPLATE: (-1, 0),
    PlayTag.DOUBLE_CONTRADICTION: (-2, -1),
    PlayTag.OFFENSIVE: (-1, -1),
    PlayTag.SELF_IMMOLATION: (-2, 0),
}


@dataclass(frozen=True)
class PlayClass:
    tag: PlayTag
    exclusive: bool = False

    def tally_delta(self, player: str) -> tuple[int, int]:
        dx, do = _X_DELTAS[self.tag]
        return (dx, do) if player == X else (do, dx)


def is_losing(row: str, col: int, player: str) -> bool:
    """True iff playing `col` puts `player` next to their own piece."""
    if col > 0 and row[col - 1] == player:
        return True
    return col + 1 < len(row) and row[col + 1] == player


def classify_play(row: str, col: int, player: str) -> PlayClass:
    """Canonical class of a non-losing play at `col` by `player`."""
    if row[col] != EMPTY:
        raise ValueError(f"column {col} is occupied")
    if is_losing(row, col, player):
        raise LosingPlay(f"{player} at {col} sits next to its own piece")
    stretch = None
    for st in template_of(row):
        if st.lo <= col <= st.hi:
            stretch = st
            break
    assert stretch is not None
    if player in stretch.prescriptions(col):
        return PlayClass(PlayTag.IN_TEMPLATE)
    # Anti-template play.
    if stretch.left is not None and stretch.right is not None:
        return PlayClass(PlayTag.DOUBLE_CONTRADICTION)
    wall_col = stretch.lo if stretch.left is None else stretch.hi
    prescribed_at_wall = (
        stretch.from_right(wall_col) if stretch.left is None else stretch.from_left(wall_col)
    )
    if prescribed_at_wall == player:
        return PlayClass(PlayTag.SELF_IMMOLATION)
    return PlayClass(PlayTag.OFFENSIVE, exclusive=(col == wall_col))


def in_template_moves(row: str, player: str) -> list[int]:
    """Non-losing in-template columns for `player`, ascending."""
    if X not in row and O not in row:
        return []
    out = []
    for st in template_of(row):
        for col in range(st.lo, st.hi + 1):
            if player in st.prescriptions(col) and not is_losing(row, col, player):
                out.append(col)
    return out


def _leftmost_in_template(row: str, player: str) -> int:
    moves = in_template_moves(row, player)
    if not moves:
        raise Stuck(f"no in-template move left for {player} on {row!r}")
    return moves[0]


def _empty_stretches(row: str) -> list[tuple[int, int]]:
    out = []
    col = 0
    while col < len(row):
        if row[col] != EMPTY:
            col += 1
            continue
        lo = col
        while col < len(row) and row[col] == EMPTY:
            col += 1
        out.append((lo, col - 1))
    return out


def _double_contradiction_cell(row: str, player: str) -> int | None:
    """Leftmost double-contradiction cell within the longest empty stretch."""
    stretches = sorted(_empty_stretches(row), key=lambda s: (-(s[1] - s[0] + 1), s[0]))
    for lo, hi in stretches:
        for col in range(lo, hi + 1):
            if is_losing(row, col, player):
                continue
            if classify_play(row, col, player).tag is PlayTag.DOUBLE_CONTRADICTION:
                return col
    return None


@functools.lru_cache(maxsize=None)
def _row_value(row: str, mover: str) -> int:
    """Exact value of an h=1, k=2 strip for the side to move: connecting two
    of your own pieces horizontally loses."""
    best = -2
    opp = _other(mover)
    for col, ch in enumerate(row):
        if ch != EMPTY:
            continue
        if is_losing(row, col, mover):
            v = -1
        else:
            after = row[:col] + mover + row[col + 1 :]
            v = 0 if EMPTY not in after else -_row_value(after, opp)
        if v > best:
            best = v
    return 0 if best == -2 else best


def _policy_move(row: str, mover: str) -> int:
    """Lowest column achieving the exact value; the precomputed-table stand-in
    for the narrative draw lines on tiny boards."""
    best, best_col = -2, None
    opp = _other(mover)
    for col, ch in enumerate(row):
        if ch != EMPTY:
            continue
        if is_losing(row, col, mover):
            v = -1
        else:
            after = row[:col] + mover + row[col + 1 :]
            v = 0 if EMPTY not in after else -_row_value(after, opp)
        if v > best:
            best, best_col = v, col
    if best_col is None:
        raise BoardFull("no empty column remains")
    return best_col


def k2_move(row: str, mover: str) -> int:
    """Deterministic k=2 move for `mover` on the rendered row.

    O's replies follow the width-parity scripts (with the exact policy on
    widths <= 6); X's draw-seeking play covers widths 1, 2, 4, and 6 only.
    """
    w = len(row)
    if EMPTY not in row:
        raise BoardFull("no empty column remains")
    if mover == X:
        if w not in P1_DRAW_WIDTHS:
            raise NotApplicable(f"P1 has no k=2 guarantee at width {w}")
        return _policy_move(row, X)
    if mover != O:
        raise ValueError(f"mover must be 'X' or 'O', got {mover!r}")
    if w <= 2 or w in (4, 6):
        return _policy_move(row, O)
    x_cols = [c for c, ch in enumerate(row) if ch == X]
    o_count = row.count(O)
    if w % 2 == 1:
        return _odd_width_reply(row, x_cols, o_count)
    return _even_width_reply(row, x_cols, o_count)


def _odd_width_reply(row: str, x_cols: list[int], o_count: int) -> int:
    w = len(row)
    if o_count == 0:
        if len(x_cols) != 1:
            raise Stuck("opening reply expects exactly one opponent piece")
        c = x_cols[0]
        if c % 2 == 1:
            # Opponent opened an even-numbered space (1-based): both walls
            # are templated for O, so a wall is an in-template move.
            return 0 if row[0] == EMPTY else w - 1
        # Odd-numbered space: both walls are templated X; taking an open one
        # is an exclusive offensive play.
        return w - 1 if c == 0 else 0
    return _leftmost_in_template(row, O)


def _even_width_reply(row: str, x_cols: list[int], o_count: int) -> int:
    w = len(row)
    if o_count == 0:
        if len(x_cols) != 1:
            raise Stuck("opening reply expects exactly one opponent piece")
        c = x_cols[0]
        if c == 0 or c == w - 1:
            return w - 1 - c  # free to take the opposite wall
        # Interior opening: exactly one wall is templated X; taking it is an
        # exclusive offensive play.
        return 0 if c % 2 == 0 else w - 1
    if (
        o_count == 1
        and len(x_cols) == 2
        and row[0] != EMPTY
        and row[w - 1] != EMPTY
        and {row[0], row[w - 1]} == {X, O}
    ):
        # Opposite-wall line, opponent's second move just landed interior.
        interior = [c for c in x_cols if c not in (0, w - 1)]
        if len(interior) == 1:
            c = interior[0]
            before = row[:c] + EMPTY + row[c + 1 :]
            if classify_play(before, c, X).tag is PlayTag.IN_TEMPLATE:
                dc = _double_contradiction_cell(row, O)
                if dc is None:
                    raise Stuck("guaranteed double contradiction is missing")
                return dc
    return _leftmost_in_template(row, O)
