"""Exhaustive misère game-tree solver over bit-packed positions.

Layout: one bit plane per player, bit index col*(h+1) + row, one sentinel
bit on top of each column so shifted runs cannot leak between columns.
The side to move always sees the pair (pos, mask) where `pos` holds the
mover's stones and `mask` all stones; this makes (pos, mask) a
side-to-move-relative perfect hash.

Search returns exact values only. A node stops early only on a proven
mover win (the maximum), so every stored value is exact and results are
independent of traversal order. Two further exact shortcuts: a position
where no k-window is open for either player is adjudicated a draw, and
line directions whose k-window cannot fit on the board are skipped.
"""

from __future__ import annotations

import struct
import sys
from dataclasses import dataclass

from .core import BoardSpec, GameState, Outcome, Player, new_game

DEFAULT_MAX_CELLS = 20
DEFAULT_PLANE_BITS = 64
DEFAULT_TABLE_CAPACITY = 1 << 22


class SolverError(Exception):
    """Base class for solver failures."""


class TooLarge(SolverError):
    """Board exceeds the configured size ceiling or bit budget."""


class BudgetExceeded(SolverError):
    """Node budget ran out before the position was solved."""


@dataclass(frozen=True)
class PackedPosition:
    """Bit-plane encoding of (cells, side to move) for one board shape."""

    width: int
    height: int
    k: int
    p1: int
    p2: int
    to_move: Player

    @property
    def plane_bits(self) -> int:
        return self.width * (self.height + 1)

    @property
    def key(self) -> int:
        """Perfect hash of (cells, to_move)."""
        n = self.plane_bits
        return (((self.p1 << n) | self.p2) << 1) | (self.to_move is Player.P2)

    def mirrored(self) -> "PackedPosition":
        stride = self.height + 1
        return PackedPosition(
            self.width,
            self.height,
            self.k,
            _mirror_plane(self.p1, self.width, stride),
            _mirror_plane(self.p2, self.width, stride),
            self.to_move,
        )

    @property
    def canonical_key(self) -> int:
        """Mirror-folded key: identical for a position and its reflection."""
        return min(self.key, self.mirrored().key)


def _mirror_plane(bits: int, width: int, stride: int) -> int:
    col_mask = (1 << stride) - 1
    out = 0
    for c in range(width):
        out |= ((bits >> (c * stride)) & col_mask) << ((width - 1 - c) * stride)
    return out


def encode(state: GameState, plane_bits: int = DEFAULT_PLANE_BITS) -> PackedPosition:
    """Pack a state into bit planes. History is not representable and is
    dropped; decode() returns an empty history."""
    w, h = state.spec.require_finite()
    stride = h + 1
    if plane_bits is not None and w * stride > plane_bits:
        raise TooLarge(f"{w}x{h} needs {w * stride} plane bits > budget {plane_bits}")
    p1 = p2 = 0
    for c, column in enumerate(state.columns):
        base = c * stride
        for r, piece in enumerate(column):
            if piece is Player.P1:
                p1 |= 1 << (base + r)
            else:
                p2 |= 1 << (base + r)
    return PackedPosition(w, h, state.spec.k, p1, p2, state.to_move)


def decode(packed: PackedPosition) -> GameState:
    """Rebuild a GameState from bit planes. The move history is unknown, so
    it comes back empty; the result is derived by scanning for runs."""
    w, h, k = packed.width, packed.height, packed.k
    spec = BoardSpec(w, h, k)
    stride = h + 1
    columns = []
    for c in range(w):
        base = c * stride
        cells = []
        for r in range(h):
            if packed.p1 & (1 << (base + r)):
                cells.append(Player.P1)
            elif packed.p2 & (1 << (base + r)):
                cells.append(Player.P2)
            else:
                break
        columns.append(tuple(cells))
    columns = tuple(columns)
    heights = tuple(len(col) for col in columns)
    geom = _Geometry(w, h, k)
    result: Outcome | None = None
    if geom.connected(packed.p1):
        result = Outcome.P2_WIN
    elif geom.connected(packed.p2):
        result = Outcome.P1_WIN
    elif all(height == h for height in heights):
        result = Outcome.DRAW
    return GameState(
        spec=spec,
        columns=columns,
        heights=heights,
        to_move=packed.to_move,
        history=(),
        result=result,
    )


_MASK64 = (1 << 64) - 1
_MIX64 = 0x9E3779B97F4A7C15


def _slot_index(key: int, capacity: int) -> int:
    """Mix every key bit into the slot index. Keys differ only in scattered
    bit ranges (stone planes under a fixed shape prefix), so plain modulo
    would cluster them; fold to 64 bits, multiply-mix, then scale."""
    folded = (key ^ (key >> 64)) & _MASK64
    return ((folded * _MIX64) & _MASK64) * capacity >> 64


class TranspositionTable:
    """Fixed-capacity keyed store of exact solved values, always-replace.

    Entries are (key, value) tuples written in a single slot assignment, so
    concurrent readers under the GIL can never see a torn pair; a lost
    insert race only costs recomputation, never a wrong value.
    """

    def __init__(self, capacity: int = DEFAULT_TABLE_CAPACITY):
        if capacity <= 0:
            raise ValueError("capacity must be positive")
        self.capacity = capacity
        self._slots: list[tuple[int, int] | None] = [None] * capacity

    def get(self, key: int) -> int | None:
        entry = self._slots[_slot_index(key, self.capacity)]
        if entry is not None and entry[0] == key:
            return entry[1]
        return None

    def put(self, key: int, value: int) -> None:
        self._slots[_slot_index(key, self.capacity)] = (key, value)

    def clear(self) -> None:
        self._slots = [None] * self.capacity


class _Geometry:
    """Per-shape bit masks and the generalized k-run test."""

    def __init__(self, width: int, height: int, k: int):
        self.width, self.height, self.k = width, height, k
        stride = height + 1
        self.stride = stride
        self.plane_bits = width * stride
        if max(width, height, k) >= 2048:
            raise TooLarge("board shape does not fit the table key layout")
        # Shape tag in the HIGH bits of every table key: one table can then
        # be shared across specs without false hits, while the low bits (the
        # stone mask) keep slot indices well spread. The marker bit makes the
        # variable-width layout self-delimiting, so keys stay globally unique.
        tag = ((width << 11) | height) << 11 | k
        self.key_prefix = (tag | (1 << 33)) << (2 * self.plane_bits)
        self.bottom = tuple(1 << (stride * c) for c in range(width))
        self.col_mask = tuple(((1 << height) - 1) << (stride * c) for c in range(width))
        self.top = tuple(1 << (stride * c + height - 1) for c in range(width))
        full = 0
        for m in self.col_mask:
            full |= m
        self.full = full
        # Shift-fold plans per direction, only for directions where a
        # k-window fits on the board at all.
        dirs = []
        if height >= k:
            dirs.append(1)
        if width >= k:
            dirs.append(stride)
        if width >= k and height >= k:
            dirs.extend((stride - 1, stride + 1))
        plans = []
        for d in dirs:
            steps = []
            n = 1
            while n < k:
                s = min(n, k - n)
                steps.append(d * s)
                n += s
            plans.append(tuple(steps))
        self.fold_plans = tuple(plans)
        self.windows = tuple(self._window_masks(dirs))
        # Center-out column order for the main search.
        self.center_out = tuple(
            sorted(range(width), key=lambda c: (abs(2 * c - (width - 1)), c))
        )
        self._mirror_shift = tuple((width - 1 - c) * stride for c in range(width))

    def _window_masks(self, dirs) -> list[int]:
        masks = []
        w, h, k, stride = self.width, self.height, self.k, self.stride
        deltas = {1: (0, 1), stride: (1, 0), stride - 1: (1, -1), stride + 1: (1, 1)}
        for d in dirs:
            dc, dr = deltas[d]
            for c in range(w):
                for r in range(h):
                    c2, r2 = c + dc * (k - 1), r + dr * (k - 1)
                    if 0 <= c2 < w and 0 <= r2 < h:
                        m = 0
                        for i in range(k):
                            m |= 1 << ((c + dc * i) * stride + (r + dr * i))
                        masks.append(m)
        return masks

    def connected(self, bits: int) -> bool:
        for plan in self.fold_plans:
            x = bits
            for s in plan:
                x &= x >> s
                if not x:
                    break
            else:
                return True
        return False

    def mirror(self, bits: int) -> int:
        col_mask = (1 << self.stride) - 1
        stride = self.stride
        out = 0
        for c, shift in enumerate(self._mirror_shift):
            out |= ((bits >> (c * stride)) & col_mask) << shift
        return out

    def both_dead(self, pos: int, opp: int) -> bool:
        """No k-window is open for either player: the game can only draw."""
        for wm in self.windows:
            if not (wm & opp) or not (wm & pos):
                return False
        return True


_geometry_cache: dict[tuple[int, int, int], _Geometry] = {}


def _geometry(w: int, h: int, k: int) -> _Geometry:
    key = (w, h, k)
    geom = _geometry_cache.get(key)
    if geom is None:
        geom = _geometry_cache[key] = _Geometry(w, h, k)
    return geom


@dataclass
class SolveResult:
    outcome: Outcome
    move: int | None
    nodes: int

    def value_for(self, player: Player) -> int:
        return self.outcome.value_for(player)


class _Search:
    """Closure-compiled negamax over one geometry.

    The recursive inner function binds every mask and the table's slot list
    as locals: each probe uses the position's plain key, and a computed
    value is stored under both the plain and the mirrored key, so the
    mirror is built once per computed node, never per lookup.
    """

    def __init__(self, geom: _Geometry, table: TranspositionTable | None, node_budget: int | None):
        self.geom = geom
        self.node_budget = node_budget
        self._counter = [0]
        self.value = self._compile(table)

    @property
    def nodes(self) -> int:
        return self._counter[0]

    def _compile(self, table: TranspositionTable | None):
        geom = self.geom
        top, bottom, col_mask, full = geom.top, geom.bottom, geom.col_mask, geom.full
        order = geom.center_out
        plans = geom.fold_plans
        windows = geom.windows
        n = geom.plane_bits
        prefix = geom.key_prefix
        mirror = geom.mirror
        counter = self._counter
        budget = self.node_budget
        slots = table._slots if table is not None else None
        cap = table.capacity if table is not None else 1

        def value(pos: int, mask: int) -> int:
            # Mover-perspective value; the position is in progress.
            key = prefix | (pos << n) | mask
            if slots is not None:
                folded = (key ^ (key >> 64)) & 0xFFFFFFFFFFFFFFFF
                slot = ((folded * 0x9E3779B97F4A7C15) & 0xFFFFFFFFFFFFFFFF) * cap >> 64
                entry = slots[slot]
                if entry is not None and entry[0] == key:
                    return entry[1]
            counter[0] += 1
            if budget is not None and counter[0] > budget:
                raise BudgetExceeded(f"node budget {budget} exhausted")
            opp = pos ^ mask
            dead = True
            for wm in windows:
                if not (wm & opp) or not (wm & pos):
                    dead = False
                    break
            if dead:
                best = 0  # no k-window open for either player: a dead draw
            else:
                best = -1
                for c in order:
                    if mask & top[c]:
                        continue
                    mbit = (mask + bottom[c]) & col_mask[c]
                    stones = pos | mbit
                    hit = False
                    for plan in plans:
                        x = stones
                        for s in plan:
                            x &= x >> s
                            if not x:
                                break
                        else:
                            hit = True
                            break
                    if hit:
                        v = -1  # mover completes a k-run and loses
                    else:
                        nmask = mask | mbit
                        v = 0 if nmask == full else -value(opp, nmask)
                    if v > best:
                        best = v
                        if v == 1:
                            break  # proven maximum; still exact
            if slots is not None:
                slots[slot] = (key, best)
                mkey = prefix | (mirror(pos) << n) | mirror(mask)
                mfolded = (mkey ^ (mkey >> 64)) & 0xFFFFFFFFFFFFFFFF
                slots[((mfolded * 0x9E3779B97F4A7C15) & 0xFFFFFFFFFFFFFFFF) * cap >> 64] = (
                    mkey,
                    best,
                )
            return best

        return value

    def root(self, pos: int, mask: int) -> tuple[int, int]:
        """Value plus the lowest-index column achieving it."""
        geom = self.geom
        opp = pos ^ mask
        best, best_col = -2, -1
        for c in range(geom.width):
            if mask & geom.top[c]:
                continue
            mbit = (mask + geom.bottom[c]) & geom.col_mask[c]
            if geom.connected(pos | mbit):
                v = -1
            else:
                nmask = mask | mbit
                v = 0 if nmask == geom.full else -self.value(opp, nmask)
            if v > best:
                best, best_col = v, c
                if v == 1:
                    break  # columns scanned in ascending order
        return best, best_col


def _require_solvable(state: GameState, max_cells: int) -> tuple[int, int]:
    w, h = state.spec.require_finite()
    if max_cells is not None and w * h > max_cells:
        raise TooLarge(f"{w}x{h} has {w * h} cells > ceiling {max_cells}")
    return w, h


def table_capacity_for(cells: int) -> int:
    """Default table sizing: roomy enough that always-replace eviction stays
    rare at the board's reachable-state scale."""
    if cells >= 14:
        return 1 << 24
    if cells >= 10:
        return 1 << 22
    return 1 << 16


def solve(
    state: GameState,
    *,
    max_cells: int | None = DEFAULT_MAX_CELLS,
    node_budget: int | None = None,
    table: TranspositionTable | None = None,
    table_capacity: int | None = None,
) -> SolveResult:
    """Exact misère value of `state` plus one optimal move.

    Raises TooLarge above the cell ceiling and BudgetExceeded when the node
    budget runs out; never returns a guessed value.
    """
    if state.loss_immune is not None:
        raise SolverError("solver handles standard rules only")
    if state.result is not None:
        return SolveResult(state.result, None, 0)
    w, h = _require_solvable(state, max_cells)
    geom = _geometry(w, h, state.spec.k)
    if table is None:
        if table_capacity is None:
            table_capacity = table_capacity_for(w * h)
        table = TranspositionTable(table_capacity)
    packed = encode(state, plane_bits=None)
    mover = state.to_move
    pos = packed.p1 if mover is Player.P1 else packed.p2
    mask = packed.p1 | packed.p2
    search = _Search(geom, table, node_budget)
    depth_limit = w * h + 100
    if sys.getrecursionlimit() < depth_limit:
        sys.setrecursionlimit(depth_limit + 1000)
    value, col = search.root(pos, mask)
    if value == 0:
        result = Outcome.DRAW
    elif value == 1:
        result = Outcome.win_for(mover)
    else:
        result = Outcome.win_for(mover.other)
    return SolveResult(result, col, search.nodes)


def best_move(state: GameState, **kwargs) -> int:
    """Column achieving the solved value; lowest index breaks ties."""
    if state.result is not None:
        raise SolverError("no move exists in a finished game")
    result = solve(state, **kwargs)
    assert result.move is not None
    return result.move


def solve_spec(spec: BoardSpec, **kwargs) -> SolveResult:
    """Value of the empty board for `spec`."""
    return solve(new_game(spec), **kwargs)


# ---------------------------------------------------------------------------
# Optional on-disk cache of solved empty-board values, keyed by (w, h, k) as
# length-prefixed binary records. Purely an optimization for repeat value
# queries; ground-truth tests never consult it.
# ---------------------------------------------------------------------------

_CACHE_RECORD = struct.Struct("<HHHB")
_CACHE_LEN = struct.Struct("<I")
_OUTCOME_CODES = {Outcome.DRAW: 0, Outcome.P1_WIN: 1, Outcome.P2_WIN: 2}
_CODE_OUTCOMES = {code: outcome for outcome, code in _OUTCOME_CODES.items()}


def save_spec_values(path, values: dict[BoardSpec, Outcome]) -> None:
    with open(path, "wb") as fh:
        for spec, outcome in sorted(
            values.items(), key=lambda item: (item[0].width, item[0].height, item[0].k)
        ):
            w, h = spec.require_finite()
            payload = _CACHE_RECORD.pack(w, h, spec.k, _OUTCOME_CODES[outcome])
            fh.write(_CACHE_LEN.pack(len(payload)))
            fh.write(payload)


def load_spec_values(path) -> dict[BoardSpec, Outcome]:
    values: dict[BoardSpec, Outcome] = {}
    with open(path, "rb") as fh:
        while True:
            header = fh.read(_CACHE_LEN.size)
            if not header:
                return values
            (length,) = _CACHE_LEN.unpack(header)
            payload = fh.read(length)
            if len(payload) != length:
                raise SolverError(f"truncated cache record in {path}")
            w, h, k, code = _CACHE_RECORD.unpack(payload)
            values[BoardSpec(w, h, k)] = _CODE_OUTCOMES[code]


def solve_spec_cached(spec: BoardSpec, path, **kwargs) -> SolveResult:
    """solve_spec with a read-through on-disk cache. Cache hits return the
    stored value without a move (only values are cached)."""
    import os

    values = load_spec_values(path) if os.path.exists(path) else {}
    hit = values.get(spec)
    if hit is not None:
        return SolveResult(hit, None, 0)
    result = solve_spec(spec, **kwargs)
    values[spec] = result.outcome
    save_spec_values(path, values)
    return result


class _BudgetOut(Exception):
    pass


def advise_move(
    state: GameState,
    *,
    node_budget: int = 500_000,
    max_cells: int | None = DEFAULT_MAX_CELLS,
) -> int:
    """A move for live play: exact when the board fits the solve ceiling and
    budget, otherwise the best move of a budgeted iterative-deepening search
    that scores unknown horizons as draws. Deterministic either way; offers
    no optimality guarantee beyond the exact case."""
    if state.result is not None:
        raise SolverError("no move exists in a finished game")
    try:
        return best_move(state, max_cells=max_cells, node_budget=node_budget)
    except (TooLarge, BudgetExceeded):
        pass
    return _deepening_move(state, node_budget)


def _deepening_move(state: GameState, node_budget: int) -> int:
    w, h = state.spec.require_finite()
    geom = _geometry(w, h, state.spec.k)
    packed = encode(state, plane_bits=None)
    pos = packed.p1 if state.to_move is Player.P1 else packed.p2
    mask = packed.p1 | packed.p2
    opp = pos ^ mask
    top, bottom, col_mask, full = geom.top, geom.bottom, geom.col_mask, geom.full
    connected = geom.connected
    counter = [0]

    def limited(pos: int, mask: int, depth: int) -> int:
        counter[0] += 1
        if counter[0] > node_budget:
            raise _BudgetOut
        if depth == 0:
            return 0
        opp_ = pos ^ mask
        best = -2
        for c in geom.center_out:
            if mask & top[c]:
                continue
            mbit = (mask + bottom[c]) & col_mask[c]
            if connected(pos | mbit):
                v = -1
            else:
                nmask = mask | mbit
                v = 0 if nmask == full else -limited(opp_, nmask, depth - 1)
            if v > best:
                best = v
                if v == 1:
                    break
        return 0 if best == -2 else best

    legal = [c for c in range(w) if not mask & top[c]]
    chosen: int | None = None
    depth = 1
    while True:
        try:
            best_v, best_c = -2, None
            for c in legal:
                mbit = (mask + bottom[c]) & col_mask[c]
                if connected(pos | mbit):
                    v = -1
                else:
                    nmask = mask | mbit
                    v = 0 if nmask == full else -limited(opp, nmask, depth - 1)
                if v > best_v:
                    best_v, best_c = v, c
            chosen = best_c
        except _BudgetOut:
            break
        if best_v != 0 or depth >= w * h - state.move_count:
            break
        depth += 1
    if chosen is not None:
        return chosen
    for c in legal:  # budget too small to finish depth 1: avoid instant losses
        mbit = (mask + bottom[c]) & col_mask[c]
        if not connected(pos | mbit):
            return c
    return legal[0]


# ---------------------------------------------------------------------------
# Naive reference enumerator: full game tree, no pruning, no table. This is
# the independent oracle the fast solver is checked against; keep it free of
# every shortcut above except terminal detection.
# ---------------------------------------------------------------------------


def naive_value(state: GameState) -> int:
    """Mover-perspective value by exhaustive unmemoized negamax."""
    if state.result is not None:
        raise SolverError("naive_value expects an in-progress position")
    w, h = state.spec.require_finite()
    geom = _geometry(w, h, state.spec.k)
    packed = encode(state, plane_bits=None)
    pos = packed.p1 if state.to_move is Player.P1 else packed.p2
    mask = packed.p1 | packed.p2
    depth_limit = w * h + 100
    if sys.getrecursionlimit() < depth_limit:
        sys.setrecursionlimit(depth_limit + 1000)
    return _naive_negamax(geom, pos, mask)


def naive_solve(state: GameState) -> Outcome:
    if state.result is not None:
        return state.result
    value = naive_value(state)
    if value == 0:
        return Outcome.DRAW
    mover = state.to_move
    return Outcome.win_for(mover) if value == 1 else Outcome.win_for(mover.other)


def _naive_negamax(geom: _Geometry, pos: int, mask: int) -> int:
    top, bottom, col_mask, full = geom.top, geom.bottom, geom.col_mask, geom.full
    plans = geom.fold_plans
    cols = range(geom.width)

    def neg(pos: int, mask: int) -> int:
        opp = pos ^ mask
        best = -2
        for c in cols:
            if mask & top[c]:
                continue
            mbit = (mask + bottom[c]) & col_mask[c]
            stones = pos | mbit
            hit = False
            for plan in plans:
                x = stones
                for s in plan:
                    x &= x >> s
                    if not x:
                        break
                else:
                    hit = True
                    break
            if hit:
                v = -1
            else:
                nmask = mask | mbit
                v = 0 if nmask == full else -neg(opp, nmask)
            if v > best:
                best = v
        return best

    return neg(pos, mask)


def naive_value_after(w: int, h: int, k: int, prefix: tuple[int, ...]) -> int:
    """Mover value after `prefix` moves from the empty board. Picklable entry
    point so callers can split the root across worker processes."""
    from .core import replay

    state = replay(BoardSpec(w, h, k), prefix)
    if state.result is not None:
        return state.result.value_for(state.to_move)
    return naive_value(state)
