"""Named verification suites behind `misere-connect verify`.

Each suite returns the certificate records it produced; a suite passes when
every record does. Suites only orchestrate the verifier; all quantification
lives there.
"""

from __future__ import annotations

from dataclasses import replace

from .core import BoardSpec, Player
from .strategies import StrategyKind, StrategyTag
from .verifier import (
    Claim,
    TableCheck,
    VerificationReport,
    spec_grid,
    verify_strategy,
    verify_table,
)


def take_even_length_bound(spec: BoardSpec) -> int:
    """Latest move on which take-even can still be winning."""
    w, h, k = spec.width, spec.height, spec.k
    return 1 + (w - w // k) * h


def _bounded(report: VerificationReport, bound: int) -> VerificationReport:
    if report.passed and report.max_game_length > bound:
        return replace(
            report,
            passed=False,
            note=f"game length {report.max_game_length} exceeds bound {bound}",
        )
    if report.passed:
        return replace(report, note=f"max length {report.max_game_length} <= bound {bound}")
    return report


def suite_theorem1() -> list[VerificationReport]:
    """Take-even wins (7,6,4) within 37 moves, and every even-height board
    (h in {2,4}, k <= w <= 7, k in {3,4}) within the closed-form bound."""
    reports = []
    spec = BoardSpec(7, 6, 4)
    kind = StrategyKind(StrategyTag.TAKE_EVEN, Player.P2)
    reports.append(_bounded(verify_strategy(spec, kind, Claim.ALWAYS_WINS), 37))
    for k in (3, 4):
        for h in (2, 4):
            for w in range(k, 8):
                spec = BoardSpec(w, h, k)
                report = verify_strategy(spec, kind, Claim.ALWAYS_WINS)
                reports.append(_bounded(report, take_even_length_bound(spec)))
    return reports


def suite_theorem3(*, stretch: bool = True) -> list[VerificationReport]:
    """Delayed take-even wins for P2 on even widths and P1 on odd widths."""
    cases = [(4, Player.P2), (6, Player.P2), (5, Player.P1)]
    if stretch:
        cases.append((7, Player.P1))
    reports = []
    for w, seat in cases:
        spec = BoardSpec(w, 3, 3)
        kind = StrategyKind(StrategyTag.DELAYED_TAKE_EVEN, seat)
        reports.append(verify_strategy(spec, kind, Claim.ALWAYS_WINS))
    return reports


def suite_theorem5(max_width: int = 12) -> list[VerificationReport]:
    """Pair strategy never connects three for either seat, even against an
    opponent who cannot lose."""
    reports = []
    for w in range(1, max_width + 1):
        for seat in (Player.P1, Player.P2):
            spec = BoardSpec(w, 1, 3)
            kind = StrategyKind(StrategyTag.PAIR, seat)
            reports.append(verify_strategy(spec, kind, Claim.NEVER_CONNECTS_K))
    return reports


def suite_automata(max_width: int = 12) -> list[VerificationReport]:
    """Automata strategy passes the same relaxed-rules suite; segment
    closure is asserted by instrumentation."""
    from .strategies import split_segments, strategist_row

    reports = []
    for w in range(1, max_width + 1):
        for seat in (Player.P1, Player.P2):
            spec = BoardSpec(w, 1, 3)
            tag = (
                StrategyTag.AUTOMATA_ODD
                if (w - (0 if seat is Player.P1 else 1)) % 2 == 1
                else StrategyTag.AUTOMATA_EVEN
            )
            kind = StrategyKind(tag, seat)
            seen_e_even = []

            def observer(before, reply, after, seat=seat, seen=seen_e_even):
                # classify_segment raises NonCanonical on a closure breach;
                # an even E segment must never exist at all.
                for state in (before, after):
                    for seg in split_segments(strategist_row(state, seat)):
                        if seg.kind.value == "E" and seg.empties % 2 == 0:
                            seen.append((state.history, seg.label))

            report = verify_strategy(spec, kind, Claim.NEVER_CONNECTS_K, observer=observer)
            if report.passed and seen_e_even:
                report = replace(
                    report, passed=False, note=f"E_even reached: {seen_e_even[0]}"
                )
            reports.append(report)
    return reports


def suite_k2() -> list[VerificationReport | TableCheck]:
    """The k=2 results: solver sweep at h=1, the template
    strategy's wins and draws, and the tall-board P2 wins."""
    records: list[VerificationReport | TableCheck] = []
    records.extend(verify_table([BoardSpec(w, 1, 2) for w in range(1, 11)]))
    for w in (3, 5, 7, 8):
        kind = StrategyKind(StrategyTag.K2, Player.P2)
        records.append(verify_strategy(BoardSpec(w, 1, 2), kind, Claim.ALWAYS_WINS))
    for w in (4, 6):
        kind = StrategyKind(StrategyTag.K2, Player.P2)
        records.append(verify_strategy(BoardSpec(w, 1, 2), kind, Claim.NEVER_LOSES))
    for w in (2, 3, 4):
        for h in (2, 3):
            tag = StrategyTag.TAKE_EVEN if h % 2 == 0 else StrategyTag.DELAYED_TAKE_EVEN
            kind = StrategyKind(tag, Player.P2)
            records.append(verify_strategy(BoardSpec(w, h, 2), kind, Claim.ALWAYS_WINS))
    return records


def suite_table1(max_cells: int = 16) -> list[TableCheck]:
    """Oracle-vs-solver equivalence on every finite spec with w*h <= max_cells."""
    return verify_table(spec_grid(max_cells), max_cells=max_cells)


SUITES = {
    "theorem1": suite_theorem1,
    "theorem3": suite_theorem3,
    "theorem5": suite_theorem5,
    "k2": suite_k2,
    "automata": suite_automata,
    "table1": suite_table1,
}


def run_suite(name: str, **kwargs) -> list:
    try:
        suite = SUITES[name]
    except KeyError:
        raise ValueError(
            f"unknown suite {name!r}; choose from {', '.join(sorted(SUITES))}"
        ) from None
    return suite(**kwargs)
