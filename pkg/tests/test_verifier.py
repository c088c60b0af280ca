import json

import pytest

from misere_connect.core import BoardSpec, Outcome, Player
from misere_connect.solver import BudgetExceeded
from misere_connect.strategies import StrategyKind, StrategyTag
from misere_connect.verifier import (
    Claim,
    spec_grid,
    strategy_vs_solver_duel,
    verify_strategy,
    verify_table,
)


def test_take_even_full_scale_shape():
    report = verify_strategy(
        BoardSpec(7, 6, 4), StrategyKind(StrategyTag.TAKE_EVEN, Player.P2), Claim.ALWAYS_WINS
    )
    assert report.passed
    assert report.states_visited <= 4**7
    assert report.max_game_length <= 37


def test_pair_relaxed_on_odd_strip():
    report = verify_strategy(
        BoardSpec(9, 1, 3), StrategyKind(StrategyTag.PAIR, Player.P1), Claim.NEVER_CONNECTS_K
    )
    assert report.passed


def test_delayed_take_even_wins_as_p1():
    report = verify_strategy(
        BoardSpec(5, 3, 3),
        StrategyKind(StrategyTag.DELAYED_TAKE_EVEN, Player.P1),
        Claim.ALWAYS_WINS,
    )
    assert report.passed


def test_false_claim_yields_replayable_counterexample():
    from misere_connect.core import replay

    # Pair play only draws a 9-strip; demanding a win must fail.
    report = verify_strategy(
        BoardSpec(9, 1, 3), StrategyKind(StrategyTag.PAIR, Player.P1), Claim.ALWAYS_WINS
    )
    assert not report.passed
    assert report.counterexample is not None
    final = replay(BoardSpec(9, 1, 3), report.counterexample)
    assert final.result is not None
    assert final.result is not Outcome.P1_WIN


def test_memoization_soundness_all_kinds_small_boards():
    """Verification with and without the memo table agrees on every
    applicable (spec, kind, claim) with w*h <= 9."""
    from misere_connect.strategies import StrategyKind, declared_claim

    claim_of = {
        "AlwaysWins": Claim.ALWAYS_WINS,
        "NeverLoses": Claim.NEVER_LOSES,
        "NeverConnectsK": Claim.NEVER_CONNECTS_K,
    }
    checked = 0
    for spec in spec_grid(9, ks=(2, 3)):
        for tag in StrategyTag:
            for seat in Player:
                kind = StrategyKind(tag, seat)
                declared = declared_claim(kind, spec)
                if declared is None:
                    continue
                claim = claim_of[declared]
                with_memo = verify_strategy(spec, kind, claim, memoize=True)
                without = verify_strategy(spec, kind, claim, memoize=False)
                assert with_memo.passed == without.passed, (spec, str(kind))
                assert with_memo.max_game_length == without.max_game_length, (spec, str(kind))
                checked += 1
    assert checked > 50


def test_verification_budget():
    with pytest.raises(BudgetExceeded):
        verify_strategy(
            BoardSpec(7, 6, 4),
            StrategyKind(StrategyTag.TAKE_EVEN, Player.P2),
            Claim.ALWAYS_WINS,
            node_budget=5,
        )


def test_verify_table_small_grid_matches():
    specs = [BoardSpec(w, h, 3) for w in range(3, 7) for h in range(1, 5) if w * h <= 16]
    checks = verify_table(specs, max_cells=16)
    assert all(check.match for check in checks)


def test_verify_table_records_budget_errors_without_aborting():
    checks = verify_table(
        [BoardSpec(4, 4, 3), BoardSpec(2, 1, 2)], max_cells=16, node_budget=5
    )
    assert checks[0].error is not None and not checks[0].match
    assert checks[1].match  # trivially small board still solved


def test_k2_strip_sweep():
    checks = verify_table([BoardSpec(w, 1, 2) for w in range(1, 11)])
    draws = {check.spec.width for check in checks if check.solved is Outcome.DRAW}
    assert draws == {1, 2, 4, 6}
    assert all(check.match for check in checks)


def test_tall_k2_boards_are_p2_wins():
    checks = verify_table([BoardSpec(w, h, 2) for w in (2, 3) for h in (2, 3)])
    assert all(check.match for check in checks)
    assert all(check.expected is Outcome.P2_WIN for check in checks)


@pytest.mark.parametrize(
    "spec,tag,seat,expected",
    [
        (BoardSpec(6, 3, 3), StrategyTag.DELAYED_TAKE_EVEN, Player.P2, Outcome.P2_WIN),
        (BoardSpec(8, 1, 2), StrategyTag.K2, Player.P2, Outcome.P2_WIN),
        (BoardSpec(4, 1, 2), StrategyTag.K2, Player.P2, Outcome.DRAW),
        (BoardSpec(9, 1, 3), StrategyTag.PAIR, Player.P1, Outcome.DRAW),
    ],
)
def test_strategy_vs_solver_duels(spec, tag, seat, expected):
    record = strategy_vs_solver_duel(spec, StrategyKind(tag, seat))
    assert record.expected is expected
    assert record.ok, record


def test_certificates_are_json_lines():
    report = verify_strategy(
        BoardSpec(4, 2, 3), StrategyKind(StrategyTag.TAKE_EVEN, Player.P2), Claim.ALWAYS_WINS
    )
    record = json.loads(report.certificate())
    assert record["result"] == "pass"
    assert record["spec"] == [4, 2, 3]
    checks = verify_table([BoardSpec(2, 1, 2)])
    assert json.loads(checks[0].certificate())["result"] == "pass"


def test_spec_grid_covers_all_shapes():
    grid = spec_grid(6, ks=(2,))
    shapes = {(spec.width, spec.height) for spec in grid}
    assert (6, 1) in shapes and (1, 6) in shapes and (2, 3) in shapes
    assert all(spec.width * spec.height <= 6 for spec in grid)
