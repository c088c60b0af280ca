"""Board, rules, and immutable game state for misère connect-k.

The game is played on a w x h grid. Players alternate dropping pieces into
columns; gravity pulls each piece to the lowest open cell. The first player
to own k contiguous pieces in a horizontal, vertical, or diagonal line LOSES
(misère condition). A full board with no such line is a draw.

Rows are indexed 0-based from the bottom everywhere in this package.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class RulesError(Exception):
    """Base class for rule-level errors."""


class InvalidSpec(RulesError):
    """Board parameters violate the game's preconditions."""


class InfiniteUnsupported(InvalidSpec):
    """An infinite extent was passed where a finite board is required."""


class IllegalMove(RulesError):
    """Move into a full column, out-of-range column, or finished game."""


class _Infinite:
    """Singleton marker for an unbounded board extent."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "Infinite"


INFINITE = _Infinite()


class Player(Enum):
    P1 = "X"
    P2 = "O"

    @property
    def other(self) -> "Player":
        return Player.P2 if self is Player.P1 else Player.P1

    @property
    def symbol(self) -> str:
        return self.value


class Outcome(Enum):
    P1_WIN = "P1Win"
    P2_WIN = "P2Win"
    DRAW = "Draw"

    @staticmethod
    def win_for(player: Player) -> "Outcome":
        return Outcome.P1_WIN if player is Player.P1 else Outcome.P2_WIN

    @property
    def winner(self) -> Player | None:
        if self is Outcome.P1_WIN:
            return Player.P1
        if self is Outcome.P2_WIN:
            return Player.P2
        return None

    def value_for(self, player: Player) -> int:
        """Mover-perspective ordering: win 1 > draw 0 > loss -1."""
        if self is Outcome.DRAW:
            return 0
        return 1 if self.winner is player else -1


def _check_extent(value, name: str) -> None:
    if value is INFINITE:
        return
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidSpec(f"{name} must be a positive integer or INFINITE, got {value!r}")
    if value < 1:
        raise InvalidSpec(f"{name} must be >= 1, got {value}")


@dataclass(frozen=True)
class BoardSpec:
    """Game parameters: board width, board height, and the losing run length k."""

    width: "int | _Infinite"
    height: "int | _Infinite"
    k: int

    def __post_init__(self) -> None:
        _check_extent(self.width, "width")
        _check_extent(self.height, "height")
        if isinstance(self.k, bool) or not isinstance(self.k, int) or self.k < 2:
            raise InvalidSpec(f"k must be an integer >= 2, got {self.k!r}")

    @property
    def is_finite(self) -> bool:
        return self.width is not INFINITE and self.height is not INFINITE

    def require_finite(self) -> tuple[int, int]:
        if not self.is_finite:
            raise InfiniteUnsupported(f"finite board required, got {self}")
        return self.width, self.height

    @property
    def cells(self) -> int:
        w, h = self.require_finite()
        return w * h

    def __repr__(self) -> str:
        return f"BoardSpec({self.width!r}x{self.height!r}, k={self.k})"


# Line directions as (dcol, drow): horizontal, vertical, both diagonals.
DIRECTIONS = ((1, 0), (0, 1), (1, 1), (1, -1))

EMPTY_CHAR = "-"


@dataclass(frozen=True, slots=True)
class GameState:
    """One position of a game in progress or just ended.

    Immutable: apply_move returns a new state, so states can be shared freely.
    `columns[c]` holds the pieces of column c from the bottom up (no gaps).
    `result` is None while the game is in progress.
    `loss_immune` disables the connect-k loss for one player; it exists only
    so the verifier can check the relaxed-rules claims and is never set in
    normal play.
    """

    spec: BoardSpec
    columns: tuple[tuple[Player, ...], ...]
    heights: tuple[int, ...]
    to_move: Player
    history: tuple[int, ...]
    result: Outcome | None = None
    loss_immune: Player | None = None

    @property
    def in_progress(self) -> bool:
        return self.result is None

    @property
    def move_count(self) -> int:
        return len(self.history)

    def cell(self, col: int, row: int) -> Player | None:
        w, h = self.spec.width, self.spec.height
        if not (0 <= col < w and 0 <= row < h):
            raise ValueError(f"cell ({col},{row}) out of bounds for {self.spec}")
        column = self.columns[col]
        return column[row] if row < len(column) else None

    def legal_moves(self) -> list[int]:
        if self.result is not None:
            return []
        h = self.spec.height
        return [c for c, height in enumerate(self.heights) if height < h]

    @property
    def is_full(self) -> bool:
        h = self.spec.height
        return all(height == h for height in self.heights)

    def apply_move(self, col: int) -> "GameState":
        if self.result is not None:
            raise IllegalMove("game already ended")
        w, h = self.spec.width, self.spec.height
        if not (0 <= col < w):
            raise IllegalMove(f"column {col} out of range 0..{w - 1}")
        if self.heights[col] >= h:
            raise IllegalMove(f"column {col} is full")
        mover = self.to_move
        row = self.heights[col]
        columns = self.columns[:col] + (self.columns[col] + (mover,),) + self.columns[col + 1 :]
        heights = self.heights[:col] + (row + 1,) + self.heights[col + 1 :]
        result: Outcome | None = None
        if mover is not self.loss_immune and _connects_through(columns, self.spec, col, row, mover):
            result = Outcome.win_for(mover.other)
        elif all(height == h for height in heights):
            result = Outcome.DRAW
        return GameState(
            spec=self.spec,
            columns=columns,
            heights=heights,
            to_move=mover.other,
            history=self.history + (col,),
            result=result,
            loss_immune=self.loss_immune,
        )

    def connects_k(self, cell: tuple[int, int], player: Player) -> bool:
        """True iff `player` owns a run of >= k through `cell` in some direction."""
        col, row = cell
        self.cell(col, row)  # bounds check
        return _connects_through(self.columns, self.spec, col, row, player)

    def mirrored(self) -> "GameState":
        """Left-right reflection; an outcome-equivalent position."""
        w = self.spec.width
        return GameState(
            spec=self.spec,
            columns=tuple(reversed(self.columns)),
            heights=tuple(reversed(self.heights)),
            to_move=self.to_move,
            history=tuple(w - 1 - c for c in self.history),
            result=self.result,
            loss_immune=self.loss_immune,
        )

    def row_text(self, row: int) -> str:
        """One row rendered as X/O/- characters, leftmost column first."""
        chars = []
        for column in self.columns:
            piece = column[row] if row < len(column) else None
            chars.append(piece.symbol if piece else EMPTY_CHAR)
        return "".join(chars)

    def render(self) -> str:
        """Canonical text rendering: h lines, top row first."""
        h = self.spec.height
        return "\n".join(self.row_text(row) for row in range(h - 1, -1, -1))

    def __str__(self) -> str:
        return self.render()


def _connects_through(
    columns: tuple[tuple[Player, ...], ...],
    spec: BoardSpec,
    col: int,
    row: int,
    player: Player,
) -> bool:
    w, h, k = spec.width, spec.height, spec.k
    column = columns[col]
    if row >= len(column) or column[row] is not player:
        return False
    for dc, dr in DIRECTIONS:
        run = 1
        for sign in (1, -1):
            c, r = col + sign * dc, row + sign * dr
            while 0 <= c < w and 0 <= r < h:
                line = columns[c]
                if r >= len(line) or line[r] is not player:
                    break
                run += 1
                c += sign * dc
                r += sign * dr
        if run >= k:
            return True
    return False


def scan_for_run(state: GameState, player: Player) -> bool:
    """Whole-board scan for any k-run owned by `player` (test oracle for
    the through-cell check used by apply_move)."""
    w, h = state.spec.width, state.spec.height
    for col in range(w):
        for row in range(len(state.columns[col])):
            if state.columns[col][row] is player and _connects_through(
                state.columns, state.spec, col, row, player
            ):
                return True
    return False


def new_game(spec: BoardSpec, loss_immune: Player | None = None) -> GameState:
    """Fresh empty board, P1 to move."""
    w, h = spec.require_finite()
    return GameState(
        spec=spec,
        columns=((),) * w,
        heights=(0,) * w,
        to_move=Player.P1,
        history=(),
        result=None,
        loss_immune=loss_immune,
    )


def replay(spec: BoardSpec, moves, loss_immune: Player | None = None) -> GameState:
    """Apply a move sequence to a fresh board."""
    state = new_game(spec, loss_immune=loss_immune)
    for col in moves:
        state = state.apply_move(col)
    return state
