import pytest

from misere_connect.core import BoardSpec, Player, new_game, replay
from misere_connect.strategies import (
    NotApplicable,
    StrategyKind,
    StrategyTag,
    applicable,
    auto_kind,
    declared_claim,
    kind_for_name,
    strategy_move,
)


def k(tag, seat):
    return StrategyKind(tag, seat)


def test_applicability_matrix():
    p1, p2 = Player.P1, Player.P2
    assert applicable(k(StrategyTag.TAKE_EVEN, p2), BoardSpec(7, 6, 4))
    assert not applicable(k(StrategyTag.TAKE_EVEN, p1), BoardSpec(7, 6, 4))
    assert not applicable(k(StrategyTag.TAKE_EVEN, p2), BoardSpec(3, 6, 4))  # w < k
    assert not applicable(k(StrategyTag.TAKE_EVEN, p2), BoardSpec(7, 5, 4))  # odd h

    assert applicable(k(StrategyTag.DELAYED_TAKE_EVEN, p2), BoardSpec(6, 3, 3))
    assert applicable(k(StrategyTag.DELAYED_TAKE_EVEN, p1), BoardSpec(5, 3, 3))
    assert not applicable(k(StrategyTag.DELAYED_TAKE_EVEN, p2), BoardSpec(5, 3, 3))
    assert not applicable(k(StrategyTag.DELAYED_TAKE_EVEN, p1), BoardSpec(6, 3, 3))
    assert applicable(k(StrategyTag.DELAYED_TAKE_EVEN, p2), BoardSpec(5, 3, 2))  # k=2: P2 any w
    assert not applicable(k(StrategyTag.DELAYED_TAKE_EVEN, p1), BoardSpec(5, 3, 2))

    for seat in (p1, p2):
        assert applicable(k(StrategyTag.PAIR, seat), BoardSpec(9, 1, 3))
        assert not applicable(k(StrategyTag.PAIR, seat), BoardSpec(9, 2, 3))
        assert not applicable(k(StrategyTag.PAIR, seat), BoardSpec(9, 1, 2))

    assert applicable(k(StrategyTag.K2, p2), BoardSpec(9, 1, 2))
    assert applicable(k(StrategyTag.K2, p1), BoardSpec(6, 1, 2))
    assert not applicable(k(StrategyTag.K2, p1), BoardSpec(9, 1, 2))
    assert not applicable(k(StrategyTag.K2, p2), BoardSpec(9, 1, 3))


def test_automata_mode_tracks_turn_parity():
    p1, p2 = Player.P1, Player.P2
    assert applicable(k(StrategyTag.AUTOMATA_ODD, p1), BoardSpec(9, 1, 3))
    assert applicable(k(StrategyTag.AUTOMATA_EVEN, p2), BoardSpec(9, 1, 3))
    assert applicable(k(StrategyTag.AUTOMATA_EVEN, p1), BoardSpec(8, 1, 3))
    assert applicable(k(StrategyTag.AUTOMATA_ODD, p2), BoardSpec(8, 1, 3))
    assert not applicable(k(StrategyTag.AUTOMATA_ODD, p1), BoardSpec(8, 1, 3))


def test_auto_kind_selection():
    p1, p2 = Player.P1, Player.P2
    assert auto_kind(BoardSpec(7, 6, 4), p2).tag is StrategyTag.TAKE_EVEN
    assert auto_kind(BoardSpec(7, 6, 4), p1) is None  # losing seat: search fallback
    assert auto_kind(BoardSpec(9, 1, 3), p1).tag is StrategyTag.PAIR
    assert auto_kind(BoardSpec(9, 1, 3), p2).tag is StrategyTag.PAIR
    assert auto_kind(BoardSpec(5, 3, 3), p1).tag is StrategyTag.DELAYED_TAKE_EVEN
    assert auto_kind(BoardSpec(5, 3, 3), p2) is None
    assert auto_kind(BoardSpec(8, 1, 2), p2).tag is StrategyTag.K2
    assert auto_kind(BoardSpec(8, 1, 2), p1) is None
    assert auto_kind(BoardSpec(6, 1, 2), p1).tag is StrategyTag.K2
    assert auto_kind(BoardSpec(4, 3, 2), p2).tag is StrategyTag.DELAYED_TAKE_EVEN
    assert auto_kind(BoardSpec(2, 5, 4), p1) is None  # narrow draw: no named strategy


def test_strategy_move_dispatch_examples():
    state = replay(BoardSpec(7, 6, 4), [3])
    assert strategy_move(k(StrategyTag.TAKE_EVEN, Player.P2), state) == 3
    state = replay(BoardSpec(8, 1, 3), [2])
    assert strategy_move(k(StrategyTag.PAIR, Player.P2), state) == 3
    state = replay(BoardSpec(3, 1, 2), [1])
    assert strategy_move(k(StrategyTag.K2, Player.P2), state) in (0, 2)


def test_strategy_move_enforces_turn_and_applicability():
    state = new_game(BoardSpec(7, 6, 4))
    with pytest.raises(NotApplicable):
        strategy_move(k(StrategyTag.TAKE_EVEN, Player.P2), state)  # P1 on move
    state = replay(BoardSpec(7, 5, 4), [3])
    with pytest.raises(NotApplicable):
        strategy_move(k(StrategyTag.TAKE_EVEN, Player.P2), state)  # odd height


def test_kind_for_name():
    spec = BoardSpec(9, 1, 3)
    assert kind_for_name("pair", spec, Player.P1).tag is StrategyTag.PAIR
    assert kind_for_name("automata", spec, Player.P1).tag is StrategyTag.AUTOMATA_ODD
    assert kind_for_name("automata", spec, Player.P2).tag is StrategyTag.AUTOMATA_EVEN
    assert kind_for_name("auto", BoardSpec(7, 6, 4), Player.P2).tag is StrategyTag.TAKE_EVEN
    assert kind_for_name("solver", spec, Player.P1) is None
    with pytest.raises(ValueError):
        kind_for_name("bogus", spec, Player.P1)


def test_declared_claims():
    p1, p2 = Player.P1, Player.P2
    assert declared_claim(k(StrategyTag.TAKE_EVEN, p2), BoardSpec(7, 6, 4)) == "AlwaysWins"
    assert declared_claim(k(StrategyTag.PAIR, p1), BoardSpec(9, 1, 3)) == "NeverConnectsK"
    assert declared_claim(k(StrategyTag.K2, p2), BoardSpec(8, 1, 2)) == "AlwaysWins"
    assert declared_claim(k(StrategyTag.K2, p2), BoardSpec(6, 1, 2)) == "NeverLoses"
    assert declared_claim(k(StrategyTag.K2, p1), BoardSpec(6, 1, 2)) == "NeverLoses"
    assert declared_claim(k(StrategyTag.TAKE_EVEN, p1), BoardSpec(7, 6, 4)) is None


def test_declared_claims_verify_on_small_boards():
    """Applicability metadata and verified reality never diverge."""
    from misere_connect.verifier import Claim, spec_grid, verify_strategy

    claims = {name: claim for name, claim in (
        ("AlwaysWins", Claim.ALWAYS_WINS),
        ("NeverLoses", Claim.NEVER_LOSES),
        ("NeverConnectsK", Claim.NEVER_CONNECTS_K),
    )}
    for spec in spec_grid(9, ks=(2, 3)):
        for tag in StrategyTag:
            for seat in Player:
                kind = StrategyKind(tag, seat)
                declared = declared_claim(kind, spec)
                if declared is None:
                    continue
                report = verify_strategy(spec, kind, claims[declared])
                assert report.passed, (spec, str(kind), declared, report.certificate())
