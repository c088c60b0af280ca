/** Pure view model: everything the board UI renders is derived from the
 * latest snapshot (plus the prediction and the engine's last move label).
 * No game logic lives here; legality and termination come from the engine. */

import type { PredictionResponse, Seat, Snapshot } from "./types.js";

export interface CellView {
  owner: "X" | "O" | null;
  mine: boolean;
}

export interface GameView {
  /** grid[0] is the TOP row, matching the snapshot's rendering. */
  grid: CellView[][];
  clickableColumns: number[];
  statusBanner: string;
  predictionBanner: string;
  strategyLabel: string;
  humanSeat: Seat;
  humanTurn: boolean;
}

export const SEAT_SYMBOL: Record<Seat, "X" | "O"> = { P1: "X", P2: "O" };

export function parseBoard(snapshot: Snapshot, humanSeat: Seat): CellView[][] {
  const mine = SEAT_SYMBOL[humanSeat];
  return snapshot.board.split("\n").map((line) =>
    [...line].map((ch) => ({
      owner: ch === "X" || ch === "O" ? ch : null,
      mine: ch === mine,
    })),
  );
}

export function statusBanner(snapshot: Snapshot, humanSeat: Seat): string {
  if (snapshot.status === "in_progress") {
    return snapshot.to_move === humanSeat ? "Your move." : "Engine is thinking…";
  }
  if (snapshot.resigned === humanSeat) {
    return "You resigned — the engine wins.";
  }
  if (snapshot.result === "Draw") {
    return "Draw — the board filled with no connection.";
  }
  const humanWon = snapshot.result === `${humanSeat}Win`;
  return humanWon
    ? `The engine connected ${snapshot.k} — you win!`
    : `You connected ${snapshot.k} — you lose.`;
}

export function predictionBanner(
  prediction: Pick<PredictionResponse, "outcome" | "rule">,
  humanSeat: Seat,
): string {
  const { outcome, rule } = prediction;
  if (outcome === "Draw") {
    return `Draw under perfect play (${rule}).`;
  }
  const winner = outcome === "P1Win" ? "P1" : "P2";
  const base = `${winner} wins under perfect play (${rule}).`;
  return winner === humanSeat ? base : `${base} You cannot win this one.`;
}

export function buildView(
  snapshot: Snapshot,
  prediction: Pick<PredictionResponse, "outcome" | "rule"> | null,
  strategyLabel: string,
  humanSeat: Seat,
): GameView {
  const humanTurn = snapshot.status === "in_progress" && snapshot.to_move === humanSeat;
  return {
    grid: parseBoard(snapshot, humanSeat),
    clickableColumns: humanTurn ? snapshot.legal_moves : [],
    statusBanner: statusBanner(snapshot, humanSeat),
    predictionBanner: prediction ? predictionBanner(prediction, humanSeat) : "",
    strategyLabel,
    humanSeat,
    humanTurn,
  };
}

export interface ConfigLimits {
  maxWidth: number;
  maxHeight: number;
}

export const UI_LIMITS: ConfigLimits = { maxWidth: 20, maxHeight: 20 };

export function validateConfig(width: number, height: number, k: number): string | null {
  if (!Number.isInteger(width) || width < 1 || width > UI_LIMITS.maxWidth) {
    return `width must be an integer in 1..${UI_LIMITS.maxWidth}`;
  }
  if (!Number.isInteger(height) || height < 1 || height > UI_LIMITS.maxHeight) {
    return `height must be an integer in 1..${UI_LIMITS.maxHeight}`;
  }
  if (!Number.isInteger(k) || k < 2) {
    return "k must be an integer >= 2";
  }
  return null;
}
