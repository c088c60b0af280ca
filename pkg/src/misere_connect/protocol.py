"""Line-delimited JSON session protocol for live play.

One request per line in, exactly one response per line out. Every response
carries a full state snapshot so clients stay stateless; replaying a
snapshot's history through the core reproduces the snapshot. Protocol
errors are responses, never session crashes.

Requests:  newgame(width,height,k,engine_seat,strategy), move(col), hint,
           state, outcome, resign.
Responses: state, engine-move(col,strategy,applied), prediction(outcome,rule),
           error(code,msg).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .core import (
    BoardSpec,
    GameState,
    IllegalMove,
    InvalidSpec,
    Outcome,
    Player,
    new_game,
)
from .oracle import outcome as oracle_outcome
from .solver import SolverError, advise_move
from .strategies import NotApplicable, StrategyError, kind_for_name, strategy_move

STRATEGY_NAMES = (
    "auto",
    "take-even",
    "delayed-take-even",
    "pair",
    "k2",
    "automata",
    "solver",
)

MAX_SESSION_CELLS = 400  # protocol guard; the UI caps dimensions at 20 anyway


@dataclass
class _Game:
    state: GameState
    engine_seat: Player
    strategy_name: str
    resigned_by: Player | None = None


class Session:
    """One game per session; a sequential request/response state machine."""

    def __init__(
        self,
        *,
        solver_budget: int = 500_000,
        default_seat: str = "P2",
        default_strategy: str = "auto",
    ):
        self._game: _Game | None = None
        self._solver_budget = solver_budget
        self._default_seat = default_seat
        self._default_strategy = default_strategy

    # -- public entry -------------------------------------------------------

    def handle_line(self, text: str) -> str:
        try:
            request = json.loads(text)
        except json.JSONDecodeError as exc:
            return json.dumps(self._error("BadRequest", f"invalid JSON: {exc}"))
        if not isinstance(request, dict) or "type" not in request:
            return json.dumps(self._error("BadRequest", "request must be an object with a 'type'"))
        return json.dumps(self.handle(request))

    def handle(self, request: dict) -> dict:
        kind = request.get("type")
        handler = getattr(self, f"_req_{str(kind).replace('-', '_')}", None)
        if handler is None:
            return self._error("UnknownRequest", f"unknown request type {kind!r}")
        try:
            return handler(request)
        except (IllegalMove, InvalidSpec, NotApplicable) as exc:
            return self._error(type(exc).__name__, str(exc))
        except (StrategyError, SolverError) as exc:
            return self._error(type(exc).__name__, str(exc))

    # -- request handlers ---------------------------------------------------

    def _req_newgame(self, request: dict) -> dict:
        try:
            width = int(request["width"])
            height = int(request["height"])
            k = int(request["k"])
        except (KeyError, TypeError, ValueError):
            return self._error("BadRequest", "newgame needs integer width, height, k")
        seat_name = request.get("engine_seat", self._default_seat)
        if seat_name not in ("P1", "P2"):
            return self._error("BadRequest", f"engine_seat must be P1 or P2, got {seat_name!r}")
        strategy = request.get("strategy", self._default_strategy)
        if strategy not in STRATEGY_NAMES:
            return self._error(
                "BadRequest", f"strategy must be one of {', '.join(STRATEGY_NAMES)}"
            )
        try:
            spec = BoardSpec(width, height, k)
            spec.require_finite()
        except InvalidSpec as exc:
            return self._error("InvalidSpec", str(exc))
        if width * height > MAX_SESSION_CELLS:
            return self._error("InvalidSpec", f"board exceeds {MAX_SESSION_CELLS} cells")
        self._game = _Game(new_game(spec), Player[seat_name], strategy)
        if self._game.state.to_move is self._game.engine_seat:
            return self._engine_reply()
        return self._state_response()

    def _req_move(self, request: dict) -> dict:
        game = self._game
        if game is None:
            return self._error("NoGame", "send newgame first")
        if game.state.result is not None or game.resigned_by is not None:
            return self._error("GameOver", "the game has ended")
        if game.state.to_move is game.engine_seat:
            return self._error("NotYourTurn", "the engine is on move")
        try:
            col = int(request["col"])
        except (KeyError, TypeError, ValueError):
            return self._error("BadRequest", "move needs an integer col")
        try:
            game.state = game.state.apply_move(col)
        except IllegalMove as exc:
            return self._error("IllegalMove", str(exc))
        if game.state.result is not None:
            return self._state_response()
        return self._engine_reply()

    def _req_hint(self, request: dict) -> dict:
        game = self._game
        if game is None:
            return self._error("NoGame", "send newgame first")
        if game.state.result is not None or game.resigned_by is not None:
            return self._error("GameOver", "the game has ended")
        if game.state.to_move is game.engine_seat:
            return self._error("NotYourTurn", "the engine is on move")
        col, label = self._pick_move(game.state, game.state.to_move, "auto")
        return self._respond(
            {"type": "engine-move", "col": col, "strategy": label, "applied": False}
        )

    def _req_state(self, request: dict) -> dict:
        if self._game is None:
            return self._error("NoGame", "send newgame first")
        return self._state_response()

    def _req_outcome(self, request: dict) -> dict:
        game = self._game
        if game is None:
            return self._error("NoGame", "send newgame first")
        predicted = oracle_outcome(game.state.spec)
        return self._respond(
            {
                "type": "prediction",
                "outcome": predicted.outcome.value,
                "rule": predicted.rule,
            }
        )

    def _req_resign(self, request: dict) -> dict:
        game = self._game
        if game is None:
            return self._error("NoGame", "send newgame first")
        if game.state.result is not None or game.resigned_by is not None:
            return self._error("GameOver", "the game has ended")
        game.resigned_by = game.engine_seat.other
        return self._state_response()

    # -- engine move selection ----------------------------------------------

    def _pick_move(self, state: GameState, seat: Player, strategy_name: str) -> tuple[int, str]:
        kind = kind_for_name(strategy_name, state.spec, seat)
        if kind is not None:
            return strategy_move(kind, state), kind.tag.value
        col = advise_move(state, node_budget=self._solver_budget)
        return col, "solver"

    def _engine_reply(self) -> dict:
        game = self._game
        col, label = self._pick_move(game.state, game.engine_seat, game.strategy_name)
        game.state = game.state.apply_move(col)
        return self._respond(
            {"type": "engine-move", "col": col, "strategy": label, "applied": True}
        )

    # -- responses ----------------------------------------------------------

    def _snapshot(self) -> dict | None:
        game = self._game
        if game is None:
            return None
        state = game.state
        spec = state.spec
        if game.resigned_by is not None:
            status = "ended"
            result = Outcome.win_for(game.resigned_by.other).value
        elif state.result is not None:
            status = "ended"
            result = state.result.value
        else:
            status = "in_progress"
            result = None
        return {
            "width": spec.width,
            "height": spec.height,
            "k": spec.k,
            "board": state.render(),
            "to_move": state.to_move.name if status == "in_progress" else None,
            "status": status,
            "result": result,
            "resigned": game.resigned_by.name if game.resigned_by else None,
            "last_move": state.history[-1] if state.history else None,
            "history": list(state.history),
            "legal_moves": state.legal_moves() if status == "in_progress" else [],
            "engine_seat": game.engine_seat.name,
            "strategy": game.strategy_name,
        }

    def _respond(self, payload: dict) -> dict:
        payload["snapshot"] = self._snapshot()
        return payload

    def _state_response(self) -> dict:
        return self._respond({"type": "state"})

    def _error(self, code: str, msg: str) -> dict:
        return self._respond({"type": "error", "code": code, "msg": msg})


def run_session(stdin=None, stdout=None, **session_kwargs) -> None:
    """Serve one session over line-delimited JSON on standard streams."""
    import sys

    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    session = Session(**session_kwargs)
    for line in stdin:
        line = line.strip()
        if not line:
            continue
        stdout.write(session.handle_line(line) + "\n")
        stdout.flush()
