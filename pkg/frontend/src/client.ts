/** Browser app: render the latest snapshot, send clicks to the server,
 * lock input while a request is in flight. All rules live in the engine. */

import type { EngineResponse, PredictionResponse, Seat, Snapshot } from "./types.js";
import { buildView, validateConfig } from "./view.js";

interface UiState {
  snapshot: Snapshot | null;
  prediction: Pick<PredictionResponse, "outcome" | "rule"> | null;
  strategyLabel: string;
  humanSeat: Seat;
  busy: boolean;
  notice: string;
}

const state: UiState = {
  snapshot: null,
  prediction: null,
  strategyLabel: "",
  humanSeat: "P1",
  busy: false,
  notice: "",
};

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

async function api(path: string, body?: unknown): Promise<any> {
  const response = await fetch(path, {
    method: body === undefined ? "GET" : "POST",
    headers: { "Content-Type": "application/json" },
    body: body === undefined ? undefined : JSON.stringify(body),
  });
  return response.json();
}

function absorb(response: EngineResponse): void {
  if (response.type === "error") {
    state.notice = `${response.code}: ${response.msg}`;
    if (response.snapshot) state.snapshot = response.snapshot;
    return;
  }
  state.notice = "";
  if (response.type === "engine-move" && response.applied) {
    state.strategyLabel = response.strategy;
  }
  if (response.type === "engine-move" && !response.applied) {
    state.notice = `Hint: column ${response.col + 1} (${response.strategy})`;
  }
  if (response.snapshot) state.snapshot = response.snapshot;
}

async function startGame(): Promise<void> {
  const width = Number(el<HTMLInputElement>("cfg-width").value);
  const height = Number(el<HTMLInputElement>("cfg-height").value);
  const k = Number(el<HTMLInputElement>("cfg-k").value);
  const humanSeat = el<HTMLSelectElement>("cfg-seat").value as Seat;
  const strategy = el<HTMLSelectElement>("cfg-strategy").value;
  const problem = validateConfig(width, height, k);
  if (problem) {
    state.notice = problem;
    render();
    return;
  }
  state.busy = true;
  render();
  try {
    const data = await api("/api/newgame", {
      width,
      height,
      k,
      human_seat: humanSeat,
      strategy,
    });
    if (data.type === "error") {
      state.notice = `${data.code}: ${data.msg}`;
      return;
    }
    state.humanSeat = humanSeat;
    state.prediction = { outcome: data.prediction.outcome, rule: data.prediction.rule };
    state.strategyLabel = data.reply.type === "engine-move" ? data.reply.strategy : "";
    state.snapshot = data.reply.snapshot;
    state.notice = "";
  } catch (err) {
    state.notice = "Engine unavailable — is the server running?";
  } finally {
    state.busy = false;
    render();
  }
}

async function playColumn(col: number): Promise<void> {
  if (state.busy || !state.snapshot) return;
  const view = buildView(state.snapshot, state.prediction, state.strategyLabel, state.humanSeat);
  if (!view.clickableColumns.includes(col)) return; // engine's turn or illegal
  state.busy = true;
  render();
  try {
    absorb(await api("/api/move", { col }));
  } catch (err) {
    state.notice = "Engine unavailable — move not delivered.";
  } finally {
    state.busy = false;
    render();
  }
}

async function resign(): Promise<void> {
  if (state.busy || !state.snapshot) return;
  state.busy = true;
  try {
    absorb(await api("/api/resign", {}));
  } finally {
    state.busy = false;
    render();
  }
}

async function hint(): Promise<void> {
  if (state.busy || !state.snapshot) return;
  state.busy = true;
  try {
    absorb(await api("/api/hint", {}));
  } finally {
    state.busy = false;
    render();
  }
}

function render(): void {
  const boardHost = el<HTMLDivElement>("board");
  const status = el<HTMLDivElement>("status-banner");
  const prediction = el<HTMLDivElement>("prediction-banner");
  const strategy = el<HTMLDivElement>("strategy-label");
  const notice = el<HTMLDivElement>("notice");
  notice.textContent = state.notice;
  if (!state.snapshot) {
    boardHost.replaceChildren();
    status.textContent = "Configure a board and press Start.";
    prediction.textContent = "";
    strategy.textContent = "";
    return;
  }
  const view = buildView(state.snapshot, state.prediction, state.strategyLabel, state.humanSeat);
  status.textContent = state.busy ? "Engine is thinking…" : view.statusBanner;
  prediction.textContent = view.predictionBanner;
  strategy.textContent = view.strategyLabel
    ? `Engine strategy: ${view.strategyLabel}`
    : "";
  const table = document.createElement("table");
  table.className = "board-grid";
  for (const row of view.grid) {
    const tr = document.createElement("tr");
    row.forEach((cell, col) => {
      const td = document.createElement("td");
      const clickable = !state.busy && view.clickableColumns.includes(col);
      td.className = [
        "cell",
        cell.owner === "X" ? "piece-x" : cell.owner === "O" ? "piece-o" : "empty",
        cell.mine ? "mine" : "",
        clickable ? "clickable" : "",
      ]
        .filter(Boolean)
        .join(" ");
      if (cell.owner) td.textContent = cell.owner;
      if (clickable) td.addEventListener("click", () => void playColumn(col));
      tr.appendChild(td);
    });
    table.appendChild(tr);
  }
  boardHost.replaceChildren(table);
}

export function init(): void {
  el<HTMLButtonElement>("cfg-start").addEventListener("click", () => void startGame());
  el<HTMLButtonElement>("btn-resign").addEventListener("click", () => void resign());
  el<HTMLButtonElement>("btn-hint").addEventListener("click", () => void hint());
  render();
}

if (typeof document !== "undefined") {
  init();
}
