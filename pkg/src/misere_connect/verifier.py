"""Exhaustive machine-checks of the strategy guarantees.

A strategy fixes one side's moves, so the game tree collapses to a graph
whose nodes are positions with the opponent to move. verify_strategy walks
that graph over ALL opponent moves, memoizing on reached positions, and
checks the claim at every terminal. verify_table sweeps board shapes and
compares the closed-form oracle against the search solver.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Callable

from .core import BoardSpec, GameState, Outcome, Player, new_game
from .oracle import outcome as oracle_outcome
from .solver import BudgetExceeded, SolverError, best_move, solve_spec
from .strategies import StrategyError, StrategyKind, strategy_move


class Claim(Enum):
    ALWAYS_WINS = "AlwaysWins"
    NEVER_LOSES = "NeverLoses"
    # Relaxed rules: the opponent cannot lose and plays on after connecting;
    # only the strategist's own connections count.
    NEVER_CONNECTS_K = "NeverConnectsK"


class VerificationError(Exception):
    pass


@dataclass
class VerificationReport:
    spec: BoardSpec
    kind: StrategyKind
    claim: Claim
    passed: bool
    states_visited: int
    max_game_length: int
    counterexample: tuple[int, ...] | None = None
    note: str = ""

    @property
    def seat(self) -> Player:
        return self.kind.seat

    def certificate(self) -> str:
        record = {
            "spec": [self.spec.width, self.spec.height, self.spec.k],
            "strategy": self.kind.tag.value,
            "seat": self.kind.seat.name,
            "claim": self.claim.value,
            "result": "pass" if self.passed else "fail",
            "states_visited": self.states_visited,
            "max_game_length": self.max_game_length,
        }
        if self.counterexample is not None:
            record["counterexample"] = list(self.counterexample)
        if self.note:
            record["note"] = self.note
        return json.dumps(record)


class _Found(Exception):
    """Internal: a counterexample line was recorded; abort the traversal."""


Observer = Callable[[GameState, int, GameState], None]


def verify_strategy(
    spec: BoardSpec,
    kind: StrategyKind,
    claim: Claim,
    *,
    node_budget: int | None = 20_000_000,
    memoize: bool = True,
    observer: Observer | None = None,
) -> VerificationReport:
    """Quantify over every opponent line with the strategist's moves fixed.

    `observer(before_reply, reply, after_reply)` is called at every
    strategist move so tests can instrument occupancy and segment claims.
    A failed claim aborts with the replayable line in the report.
    """
    strategist = kind.seat
    immune = strategist.other if claim is Claim.NEVER_CONNECTS_K else None
    memo: dict = {}
    stats = {"nodes": 0}
    line: list[int] = []
    failure: dict = {}

    win = Outcome.win_for(strategist)
    loss = Outcome.win_for(strategist.other)

    def terminal_ok(result: Outcome) -> bool:
        if claim is Claim.ALWAYS_WINS:
            return result == win
        return result != loss

    def strategist_step(state: GameState) -> GameState | None:
        """Play the strategist's reply; returns the new state or None when
        the reply ended the game (after checking the claim)."""
        try:
            reply = strategy_move(kind, state)
        except StrategyError as exc:
            # A rule demanded a move that does not exist: the claim fails.
            failure["line"] = tuple(line)
            failure["note"] = f"{type(exc).__name__}: {exc}"
            raise _Found from exc
        after = state.apply_move(reply)
        if observer is not None:
            observer(state, reply, after)
        line.append(reply)
        if after.result is not None:
            if not terminal_ok(after.result):
                failure["line"] = tuple(line)
                raise _Found
            line.pop()
            return None
        return after

    def explore(state: GameState) -> int:
        """Max plies remaining from a position with the opponent to move."""
        key = state.columns
        if memoize and key in memo:
            return memo[key]
        stats["nodes"] += 1
        if node_budget is not None and stats["nodes"] > node_budget:
            raise BudgetExceeded(f"verification budget {node_budget} exhausted")
        longest = 0
        for move in state.legal_moves():
            line.append(move)
            child = state.apply_move(move)
            if child.result is not None:
                if not terminal_ok(child.result):
                    failure["line"] = tuple(line)
                    raise _Found
                depth = 1
            else:
                after = strategist_step(child)
                if after is None:
                    depth = 2
                else:
                    depth = 2 + explore(after)
                    line.pop()
            line.pop()
            longest = max(longest, depth)
        if memoize:
            memo[key] = longest
        return longest

    root = new_game(spec, loss_immune=immune)
    prefix = 0
    passed = True
    max_len = 0
    try:
        if strategist is Player.P1:
            opening = strategist_step(root)
            prefix = 1
            if opening is not None:
                max_len = prefix + explore(opening)
            else:
                max_len = prefix
        else:
            max_len = explore(root)
    except _Found:
        passed = False
        max_len = len(failure["line"])

    return VerificationReport(
        spec=spec,
        kind=kind,
        claim=claim,
        passed=passed,
        states_visited=stats["nodes"],
        max_game_length=max_len,
        counterexample=failure.get("line"),
        note=failure.get("note", ""),
    )


@dataclass
class TableCheck:
    spec: BoardSpec
    expected: Outcome
    rule: str
    solved: Outcome | None
    error: str | None

    @property
    def match(self) -> bool:
        return self.solved is not None and self.solved == self.expected

    def certificate(self) -> str:
        return json.dumps(
            {
                "spec": [self.spec.width, self.spec.height, self.spec.k],
                "oracle": self.expected.value,
                "rule": self.rule,
                "solver": self.solved.value if self.solved else None,
                "error": self.error,
                "result": "pass" if self.match else "fail",
            }
        )


def verify_table(
    specs,
    *,
    max_cells: int | None = None,
    node_budget: int | None = None,
) -> list[TableCheck]:
    """Compare the oracle against the solver on every given spec. Budget
    errors are recorded per spec; the sweep never aborts. One table, sized
    for the largest board, is shared across the whole sweep."""
    from .solver import TranspositionTable, table_capacity_for

    specs = list(specs)
    checks = []
    largest = max((s.cells for s in specs if s.is_finite), default=0)
    table = TranspositionTable(table_capacity_for(largest))
    for spec in specs:
        predicted = oracle_outcome(spec)
        solved = None
        error = None
        try:
            solved = solve_spec(
                spec, max_cells=max_cells, node_budget=node_budget, table=table
            ).outcome
        except SolverError as exc:
            error = f"{type(exc).__name__}: {exc}"
        checks.append(TableCheck(spec, predicted.outcome, predicted.rule, solved, error))
    return checks


def spec_grid(max_cells: int, ks=(2, 3, 4, 5)) -> list[BoardSpec]:
    """Every finite spec with w*h <= max_cells and k in ks."""
    out = []
    for w in range(1, max_cells + 1):
        for h in range(1, max_cells // w + 1):
            for k in ks:
                out.append(BoardSpec(w, h, k))
    return out


@dataclass
class DuelRecord:
    spec: BoardSpec
    kind: StrategyKind
    moves: tuple[int, ...]
    achieved: Outcome
    expected: Outcome

    @property
    def ok(self) -> bool:
        return self.achieved == self.expected


def strategy_vs_solver_duel(
    spec: BoardSpec,
    kind: StrategyKind,
    *,
    max_cells: int | None = None,
    node_budget: int | None = None,
) -> DuelRecord:
    """Play the strategy against solver-optimal opposition; the oracle
    outcome must be achieved."""
    state = new_game(spec)
    while state.result is None:
        if state.to_move is kind.seat:
            move = strategy_move(kind, state)
        else:
            move = best_move(state, max_cells=max_cells, node_budget=node_budget)
        state = state.apply_move(move)
    return DuelRecord(
        spec=spec,
        kind=kind,
        moves=state.history,
        achieved=state.result,
        expected=oracle_outcome(spec).outcome,
    )
