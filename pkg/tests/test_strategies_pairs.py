import pytest

from misere_connect.core import BoardSpec, Player
from misere_connect.strategies import (
    BoardFull,
    PairLabeling,
    is_pair_balanced,
    pair_move,
    pair_strategy_move,
)
from misere_connect.verifier import Claim, verify_strategy
from misere_connect.strategies import StrategyKind, StrategyTag


def test_labeling_even_width():
    lab = PairLabeling.for_width(8)
    assert lab.pair_of == (0, 0, 1, 1, 2, 2, 3, 3)
    assert lab.singleton is None
    assert lab.partner(2) == 3 and lab.partner(3) == 2


def test_labeling_odd_width_keeps_singleton():
    lab = PairLabeling.for_width(7)
    assert lab.singleton == 6
    assert lab.pair_of[6] is None
    assert lab.partner(6) is None


def test_take_other_fills_the_opponents_pair():
    lab = PairLabeling.for_width(8)
    assert pair_move("--X-----", lab, "O") == 3


def test_rightmost_rule_takes_singleton_then_pair_half():
    assert pair_move("-------", PairLabeling.for_width(7), "X") == 6
    assert pair_move("--------", PairLabeling.for_width(8), "X") == 7


def test_take_other_beats_rightmost():
    # Opponent O holds half of pair 0; X must balance it, not play rightmost.
    lab = PairLabeling.for_width(6)
    assert pair_move("O----X", lab, "X") == 1


def test_board_full_raises():
    lab = PairLabeling.for_width(2)
    with pytest.raises(BoardFull):
        pair_move("XO", lab, "X")


def test_pair_strategy_move_on_states():
    from misere_connect.core import replay

    state = replay(BoardSpec(8, 1, 3), [2])
    assert pair_strategy_move(state) == 3


@pytest.mark.parametrize("w", range(1, 13))
@pytest.mark.parametrize("seat", [Player.P1, Player.P2])
def test_pair_safety_invariants(w, seat):
    """At the strategist's turn at most one pair is opponent-half-filled,
    and every full final board is pair-balanced."""
    lab = PairLabeling.for_width(w)
    opponent = seat.other.symbol

    def observer(before, reply, after):
        row = before.row_text(0)
        half_filled = 0
        for pid in range(lab.pair_count):
            pair = (row[2 * pid], row[2 * pid + 1])
            if sorted(pair) == sorted((opponent, "-")):
                half_filled += 1
        assert half_filled <= 1, row
        if after.is_full:
            assert is_pair_balanced(after.row_text(0), lab), after.row_text(0)

    kind = StrategyKind(StrategyTag.PAIR, seat)
    report = verify_strategy(BoardSpec(w, 1, 3), kind, Claim.NEVER_LOSES, observer=observer)
    assert report.passed, report.certificate()
