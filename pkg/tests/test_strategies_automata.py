import pytest

from misere_connect.core import BoardSpec, Player, replay
from misere_connect.strategies import (
    NoSafeMove,
    NonCanonical,
    automata_move,
    automata_strategy_move,
    classify_segment,
    live_parity,
    split_segments,
    strategist_row,
)


def test_split_segments_worked_example():
    segments = split_segments("X-O---XO--")
    assert [s.label for s in segments] == ["B_1", "B_3", "A_2"]
    assert [(s.lo, s.hi) for s in segments] == [(0, 1), (3, 6), (8, 9)]


def test_whole_row_between_walls():
    assert [s.label for s in split_segments("X---X")] == ["C_3"]
    assert [s.label for s in split_segments("---------")] == ["A_9"]


@pytest.mark.parametrize(
    "cells,label",
    [
        ("X--", "B_2"),
        ("--X", "B_2"),
        ("--XX", "D_2"),
        ("XX-X", "E_1"),
        ("X-X", "C_1"),
        ("----", "A_4"),
    ],
)
def test_classify_segment(cells, label):
    assert classify_segment(cells).label == label


def test_interior_x_is_non_canonical():
    with pytest.raises(NonCanonical):
        classify_segment("-X-")
    with pytest.raises(NonCanonical):
        classify_segment("XX-XX")


def test_full_intervals_merge_into_filler():
    # A spent interval (no empty cell) reads as filler and disappears.
    assert [s.label for s in split_segments("XXO--")] == ["A_2"]


def test_odd_mode_prefers_odd_a_or_b():
    segments = split_segments("---OX--X")  # A_3 then C_2
    index, col = automata_move(segments, "odd")
    assert (index, col) == (0, 0)  # A_3 -> B_2 at its left edge
    with pytest.raises(NoSafeMove):
        automata_move(split_segments("X--XO----"), "odd")  # C_2 and A_4 only


def test_even_mode_priority_one_is_the_even_d():
    segments = split_segments("XX--O----")  # D_2 then A_4
    index, col = automata_move(segments, "even")
    assert (index, col) == (0, 3)
    after = "XX-XO----"
    assert [s.label for s in split_segments(after)][0] == "E_1"


def test_even_mode_priority_three_danger_creating_plays():
    # Only a B_even: play its empty edge, creating C_odd.
    segments = split_segments("X--")
    index, col = automata_move(segments, "even")
    assert (index, col) == (0, 2)
    # Only a C_even: play beside a lone-X edge, creating E_odd.
    segments = split_segments("X--X")
    index, col = automata_move(segments, "even")
    assert (index, col) == (0, 1)


def test_strategy_move_relabels_for_the_strategist():
    # P2 to move: P1's opening piece is filler from P2's point of view.
    state = replay(BoardSpec(9, 1, 3), [4])
    assert strategist_row(state, Player.P2) == "----O----"
    assert live_parity(state) == "even"
    col = automata_strategy_move(state)
    assert col in (0, 5)  # an A_4 edge
    assert col == 0  # lowest-column tie-break picks the left segment


def test_opening_moves_by_mode():
    odd_board = replay(BoardSpec(9, 1, 3), [])
    assert live_parity(odd_board) == "odd"
    assert automata_strategy_move(odd_board) == 0  # A_9 -> B_8
    even_board = replay(BoardSpec(8, 1, 3), [])
    assert live_parity(even_board) == "even"
    assert automata_strategy_move(even_board) == 0  # A_8 -> B_7 (priority 2)
