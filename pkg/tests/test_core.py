import random

import pytest

from misere_connect.core import (
    INFINITE,
    BoardSpec,
    GameState,
    IllegalMove,
    InfiniteUnsupported,
    InvalidSpec,
    Outcome,
    Player,
    new_game,
    replay,
    scan_for_run,
)


def test_new_game_standard_board():
    state = new_game(BoardSpec(7, 6, 4))
    assert state.to_move is Player.P1
    assert state.result is None
    assert state.heights == (0,) * 7
    assert state.legal_moves() == list(range(7))


def test_new_game_minimal_board():
    state = new_game(BoardSpec(1, 1, 2))
    assert state.legal_moves() == [0]


def test_new_game_rejects_infinite_extents():
    with pytest.raises(InfiniteUnsupported):
        new_game(BoardSpec(3, INFINITE, 3))
    with pytest.raises(InfiniteUnsupported):
        new_game(BoardSpec(INFINITE, 3, 3))


@pytest.mark.parametrize("w,h,k", [(0, 6, 4), (7, 0, 4), (-1, 2, 3), (7, 6, 1), (7, 6, 0)])
def test_invalid_spec_rejected(w, h, k):
    with pytest.raises(InvalidSpec):
        BoardSpec(w, h, k)


def test_legal_moves_excludes_full_column():
    state = new_game(BoardSpec(7, 6, 4))
    # Fill column 3 with six alternating pieces; no line forms vertically.
    for _ in range(3):
        state = state.apply_move(3)
        state = state.apply_move(3)
    assert state.heights[3] == 6
    assert state.legal_moves() == [0, 1, 2, 4, 5, 6]


def test_legal_moves_empty_after_game_ends():
    # P1 stacks column 0 four times; P2 answers far away each turn.
    state = replay(BoardSpec(7, 6, 4), [0, 2, 0, 4, 0, 6, 0])
    assert state.result is Outcome.P2_WIN
    assert state.legal_moves() == []


def test_vertical_connect_by_mover_loses():
    state = replay(BoardSpec(7, 6, 4), [0, 2, 0, 4, 0, 6])
    assert state.result is None
    state = state.apply_move(0)  # P1's fourth piece in column 0
    assert state.result is Outcome.P2_WIN


def test_two_wide_strip_fills_to_draw():
    # Adjacent cells owned by different players never count as a run.
    state = replay(BoardSpec(2, 1, 2), [0, 1])
    assert state.result is Outcome.DRAW


def test_moves_after_end_or_into_full_column_rejected():
    done = replay(BoardSpec(2, 1, 2), [0, 1])
    with pytest.raises(IllegalMove):
        done.apply_move(0)
    tall = replay(BoardSpec(2, 2, 4), [0, 0])
    with pytest.raises(IllegalMove):
        tall.apply_move(0)
    with pytest.raises(IllegalMove):
        tall.apply_move(9)


def test_connects_k_horizontal_run():
    # Row 0 becomes X X X on a k=3 board; the game ends as it completes.
    state = replay(BoardSpec(5, 2, 3), [0, 0, 1, 1, 2])
    assert state.result is Outcome.P2_WIN
    assert state.connects_k((1, 0), Player.P1)
    assert not state.connects_k((1, 0), Player.P2)


def test_connects_k_diagonal_run():
    moves = [0, 1, 1, 2, 3, 2, 2]  # X lands on (0,0), (1,1), (2,2)
    state = replay(BoardSpec(5, 3, 3), moves)
    assert state.result is Outcome.P2_WIN
    assert state.connects_k((2, 2), Player.P1)
    assert state.connects_k((0, 0), Player.P1)


def test_broken_run_does_not_connect():
    # Row reads X X O X with k=3: no X run of three.
    state = replay(BoardSpec(4, 2, 3), [0, 2, 1, 2, 3])
    assert state.result is None
    for col in (0, 1, 3):
        assert not state.connects_k((col, 0), Player.P1)


def test_mirror_reflects_and_inverts():
    state = replay(BoardSpec(7, 6, 4), [0])
    mirrored = state.mirrored()
    assert mirrored.cell(6, 0) is Player.P1
    assert mirrored.cell(0, 0) is None
    assert mirrored.history == (6,)
    assert mirrored.mirrored() == state


def test_mirror_fixed_point_on_symmetric_position():
    state = replay(BoardSpec(5, 2, 4), [2, 2])
    assert state.mirrored() == state


def test_render_canonical_text():
    state = replay(BoardSpec(5, 1, 2), [1, 2])
    assert state.render() == "-XO--"
    tall = replay(BoardSpec(3, 2, 4), [0, 0])
    assert tall.render() == "O--\nX--"
    assert tall.row_text(0) == "X--"


def _random_playout(spec: BoardSpec, rng: random.Random) -> list[GameState]:
    state = new_game(spec)
    states = [state]
    while state.result is None:
        state = state.apply_move(rng.choice(state.legal_moves()))
        states.append(state)
    return states


@pytest.mark.parametrize("w,h,k", [(7, 6, 4), (5, 3, 3), (9, 1, 3), (6, 1, 2), (4, 4, 2)])
def test_playout_invariants(w, h, k):
    rng = random.Random(20_000 + w * 100 + h * 10 + k)
    for _ in range(40):
        trace = _random_playout(BoardSpec(w, h, k), rng)
        for state in trace:
            p1 = sum(1 for col in state.columns for piece in col if piece is Player.P1)
            p2 = sum(1 for col in state.columns for piece in col if piece is Player.P2)
            assert p1 - p2 in (0, 1)
            assert (p1 - p2 == 1) == (state.to_move is Player.P2)
            assert state.heights == tuple(len(col) for col in state.columns)
            if state.result is not None:
                assert state.legal_moves() == []
        # The ending is either a draw on a full board or a loss by the last
        # mover; apply_move never awards a win to the mover.
        last = trace[-1]
        mover = last.to_move.other  # the player who made the final move
        assert last.result is not None
        if last.result is not Outcome.DRAW:
            assert last.result is Outcome.win_for(mover.other)


@pytest.mark.parametrize("w,h,k", [(7, 6, 4), (4, 3, 3), (8, 1, 2)])
def test_through_cell_check_agrees_with_full_scan(w, h, k):
    rng = random.Random(31_337 + w)
    for _ in range(25):
        for state in _random_playout(BoardSpec(w, h, k), rng):
            for player in Player:
                lost_to = Outcome.win_for(player.other)
                assert scan_for_run(state, player) == (state.result is lost_to)


def test_mirror_preserves_solver_outcome_small_boards():
    # 500 random states per spec; one shared table per spec keeps this fast.
    from misere_connect.solver import TranspositionTable, solve

    rng = random.Random(7)
    for w, h, k in [(4, 3, 3), (6, 2, 2), (3, 4, 3), (12, 1, 2), (10, 1, 3)]:
        spec = BoardSpec(w, h, k)
        table = TranspositionTable(1 << 20)
        seen = 0
        while seen < 500:
            for state in _random_playout(spec, rng)[:-1]:
                assert (
                    solve(state, table=table).outcome
                    == solve(state.mirrored(), table=table).outcome
                ), f"mirror changed the value of\n{state.render()}"
                seen += 1
                if seen >= 500:
                    break


def test_loss_immune_player_keeps_playing():
    spec = BoardSpec(7, 6, 4)
    state = new_game(spec, loss_immune=Player.P1)
    for col in [0, 2, 0, 4, 0, 6, 0]:
        state = state.apply_move(col)
    # P1 has four in a row but is immune: the game continues.
    assert state.result is None
    assert state.connects_k((0, 3), Player.P1)
