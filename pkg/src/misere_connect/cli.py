"""Command-line front end: outcome, solve, verify, replay, and session."""

from __future__ import annotations

import argparse
import json
import sys

from .core import INFINITE, BoardSpec, InvalidSpec, replay
from .oracle import outcome
from .protocol import run_session
from .solver import SolverError, solve
from .suites import SUITES, run_suite


def _parse_extent(token: str):
    if token.lower() in ("inf", "infinite"):
        return INFINITE
    try:
        return int(token)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or 'inf', got {token!r}")


def _parse_moves(text: str) -> list[int]:
    if not text:
        return []
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"moves must be comma-separated integers: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="misere-connect",
        description="Misère connect-k: closed-form outcomes, exact solving, "
        "strategy verification, and a live play protocol.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_outcome = sub.add_parser("outcome", help="closed-form game value for (w, h, k)")
    p_outcome.add_argument("width", type=_parse_extent)
    p_outcome.add_argument("height", type=_parse_extent)
    p_outcome.add_argument("k", type=int)

    p_solve = sub.add_parser("solve", help="exact search value of a position")
    p_solve.add_argument("--width", type=int, required=True)
    p_solve.add_argument("--height", type=int, required=True)
    p_solve.add_argument("--k", type=int, required=True)
    p_solve.add_argument("--moves", type=_parse_moves, default=[], help="comma-separated columns")
    p_solve.add_argument("--max-cells", type=int, default=20)
    p_solve.add_argument("--budget", type=int, default=None, help="node budget")

    p_verify = sub.add_parser("verify", help="run a named verification suite")
    p_verify.add_argument("suite", choices=sorted(SUITES))
    p_verify.add_argument("--max-cells", type=int, default=None, help="table1 sweep ceiling")
    p_verify.add_argument("--out", default=None, help="write certificates to this file")

    p_replay = sub.add_parser("replay", help="replay moves and print the snapshot JSON")
    p_replay.add_argument("--width", type=int, required=True)
    p_replay.add_argument("--height", type=int, required=True)
    p_replay.add_argument("--k", type=int, required=True)
    p_replay.add_argument("--moves", type=_parse_moves, default=[])

    p_session = sub.add_parser("session", help="serve the line-delimited play protocol on stdio")
    p_session.add_argument("--budget", type=int, default=500_000, help="solver fallback budget")
    p_session.add_argument(
        "--seat", choices=["P1", "P2"], default="P2", help="default engine seat for newgame"
    )
    p_session.add_argument(
        "--strategy", default="auto", help="default engine strategy for newgame"
    )

    return parser


def cmd_outcome(args) -> int:
    spec = BoardSpec(args.width, args.height, args.k)
    print(outcome(spec).describe())
    return 0


def cmd_solve(args) -> int:
    state = replay(BoardSpec(args.width, args.height, args.k), args.moves)
    if state.result is not None:
        print(f"{state.result.value} (position already ended)")
        return 0
    result = solve(state, max_cells=args.max_cells, node_budget=args.budget)
    move = "-" if result.move is None else result.move
    print(f"{result.outcome.value} move={move} nodes={result.nodes}")
    return 0


def cmd_verify(args) -> int:
    kwargs = {}
    if args.suite == "table1" and args.max_cells is not None:
        kwargs["max_cells"] = args.max_cells
    records = run_suite(args.suite, **kwargs)
    lines = [record.certificate() for record in records]
    if args.out:
        with open(args.out, "w") as fh:
            fh.write("\n".join(lines) + "\n")
    else:
        for line in lines:
            print(line)
    failed = [record for record in records if not _record_ok(record)]
    summary = f"{args.suite}: {len(records) - len(failed)}/{len(records)} checks passed"
    print(summary, file=sys.stderr)
    return 1 if failed else 0


def _record_ok(record) -> bool:
    return record.passed if hasattr(record, "passed") else record.match


def cmd_replay(args) -> int:
    state = replay(BoardSpec(args.width, args.height, args.k), args.moves)
    print(
        json.dumps(
            {
                "width": args.width,
                "height": args.height,
                "k": args.k,
                "board": state.render(),
                "to_move": state.to_move.name if state.result is None else None,
                "status": "in_progress" if state.result is None else "ended",
                "result": state.result.value if state.result else None,
                "last_move": state.history[-1] if state.history else None,
                "history": list(state.history),
                "legal_moves": state.legal_moves(),
            }
        )
    )
    return 0


def cmd_session(args) -> int:
    run_session(
        solver_budget=args.budget,
        default_seat=args.seat,
        default_strategy=args.strategy,
    )
    return 0


_COMMANDS = {
    "outcome": cmd_outcome,
    "solve": cmd_solve,
    "verify": cmd_verify,
    "replay": cmd_replay,
    "session": cmd_session,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (InvalidSpec, SolverError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
