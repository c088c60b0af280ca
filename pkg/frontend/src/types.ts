/** Wire types for the engine's line-delimited JSON session protocol. */

export type Seat = "P1" | "P2";

export type StrategyName =
  | "auto"
  | "take-even"
  | "delayed-take-even"
  | "pair"
  | "k2"
  | "automata"
  | "solver";

export interface Snapshot {
  width: number;
  height: number;
  k: number;
  /** Canonical rendering: height lines top-down of X / O / - characters. */
  board: string;
  to_move: Seat | null;
  status: "in_progress" | "ended";
  result: "P1Win" | "P2Win" | "Draw" | null;
  resigned: Seat | null;
  last_move: number | null;
  history: number[];
  legal_moves: number[];
  engine_seat: Seat;
  strategy: StrategyName;
}

export interface StateResponse {
  type: "state";
  snapshot: Snapshot;
}

export interface EngineMoveResponse {
  type: "engine-move";
  col: number;
  strategy: string;
  applied: boolean;
  snapshot: Snapshot;
}

export interface PredictionResponse {
  type: "prediction";
  outcome: "P1Win" | "P2Win" | "Draw";
  rule: string;
  snapshot: Snapshot | null;
}

export interface ErrorResponse {
  type: "error";
  code: string;
  msg: string;
  snapshot: Snapshot | null;
}

export type EngineResponse =
  | StateResponse
  | EngineMoveResponse
  | PredictionResponse
  | ErrorResponse;

export interface NewGameRequest {
  type: "newgame";
  width: number;
  height: number;
  k: number;
  engine_seat: Seat;
  strategy: StrategyName;
}

export type EngineRequest =
  | NewGameRequest
  | { type: "move"; col: number }
  | { type: "hint" }
  | { type: "state" }
  | { type: "outcome" }
  | { type: "resign" };
