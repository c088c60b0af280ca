import { describe, expect, it } from "vitest";

import type { Snapshot } from "../src/types.js";
import { buildView, predictionBanner, statusBanner, validateConfig } from "../src/view.js";

function snapshot(overrides: Partial<Snapshot> = {}): Snapshot {
  return {
    width: 3,
    height: 2,
    k: 2,
    board: "---\nXO-",
    to_move: "P1",
    status: "in_progress",
    result: null,
    resigned: null,
    last_move: 1,
    history: [0, 1],
    legal_moves: [0, 1, 2],
    engine_seat: "P2",
    strategy: "auto",
    ...overrides,
  };
}

describe("board parsing", () => {
  it("mirrors the snapshot rendering exactly, top row first", () => {
    const view = buildView(snapshot(), null, "", "P1");
    expect(view.grid).toHaveLength(2);
    expect(view.grid[0].map((c) => c.owner)).toEqual([null, null, null]);
    expect(view.grid[1].map((c) => c.owner)).toEqual(["X", "O", null]);
    expect(view.grid[1][0].mine).toBe(true);
    expect(view.grid[1][1].mine).toBe(false);
  });

  it("marks only legal columns clickable, and only on the human's turn", () => {
    const mine = buildView(snapshot({ legal_moves: [2] }), null, "", "P1");
    expect(mine.clickableColumns).toEqual([2]);
    const theirs = buildView(snapshot({ to_move: "P2" }), null, "", "P1");
    expect(theirs.clickableColumns).toEqual([]);
    const over = buildView(
      snapshot({ status: "ended", result: "Draw", to_move: null, legal_moves: [] }),
      null,
      "",
      "P1",
    );
    expect(over.clickableColumns).toEqual([]);
  });
});

describe("banners", () => {
  it("tells a losing human they cannot win", () => {
    const text = predictionBanner({ outcome: "P2Win", rule: "even-height" }, "P1");
    expect(text).toBe("P2 wins under perfect play (even-height). You cannot win this one.");
  });

  it("does not warn the winning seat", () => {
    const text = predictionBanner({ outcome: "P2Win", rule: "even-height" }, "P2");
    expect(text).toBe("P2 wins under perfect play (even-height).");
  });

  it("announces draws with the rule label", () => {
    expect(predictionBanner({ outcome: "Draw", rule: "height1-strip" }, "P1")).toBe(
      "Draw under perfect play (height1-strip).",
    );
  });

  it("explains a misère loss in plain words", () => {
    const lost = snapshot({
      status: "ended",
      result: "P2Win",
      to_move: null,
      k: 4,
      legal_moves: [],
    });
    expect(statusBanner(lost, "P1")).toBe("You connected 4 — you lose.");
    expect(statusBanner(lost, "P2")).toBe("The engine connected 4 — you win!");
  });
});

describe("config validation", () => {
  it("accepts the standard board", () => {
    expect(validateConfig(7, 6, 4)).toBeNull();
  });
  it("rejects zero and oversized dimensions", () => {
    expect(validateConfig(0, 6, 4)).toMatch(/width/);
    expect(validateConfig(7, 21, 4)).toMatch(/height/);
    expect(validateConfig(7, 6, 1)).toMatch(/k/);
  });
});
