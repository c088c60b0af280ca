import type { Server } from "node:http";
import type { AddressInfo } from "node:net";

import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { EngineBridge } from "../src/bridge.js";
import { createApp } from "../src/server.js";

let bridge: EngineBridge;
let server: Server;
let base: string;

beforeAll(async () => {
  bridge = new EngineBridge();
  const app = createApp(bridge);
  await new Promise<void>((resolve) => {
    server = app.listen(0, resolve);
  });
  base = `http://127.0.0.1:${(server.address() as AddressInfo).port}`;
});

afterAll(async () => {
  await new Promise((resolve) => server.close(resolve));
  bridge.close();
});

async function post(path: string, body: unknown) {
  const response = await fetch(base + path, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(body),
  });
  return { status: response.status, data: await response.json() };
}

describe("http bridge", () => {
  it("starts a game and reports the prediction banner data", async () => {
    const { status, data } = await post("/api/newgame", {
      width: 7,
      height: 6,
      k: 4,
      human_seat: "P1",
      strategy: "auto",
    });
    expect(status).toBe(200);
    expect(data.human_seat).toBe("P1");
    expect(data.reply.type).toBe("state");
    expect(data.prediction.outcome).toBe("P2Win");
    expect(data.reply.snapshot.board.split("\n")).toHaveLength(6);
  });

  it("relays moves and engine replies", async () => {
    const { status, data } = await post("/api/move", { col: 3 });
    expect(status).toBe(200);
    expect(data.type).toBe("engine-move");
    expect(data.col).toBe(3);
    expect(data.strategy).toBe("take-even");
  });

  it("serves the current state to stateless clients", async () => {
    const response = await fetch(base + "/api/state");
    const data = await response.json();
    expect(data.type).toBe("state");
    expect(data.snapshot.history).toEqual([3, 3]);
  });

  it("rejects configs outside the UI limits without touching the engine", async () => {
    const { status, data } = await post("/api/newgame", { width: 0, height: 6, k: 4 });
    expect(status).toBe(400);
    expect(data.code).toBe("BadConfig");
  });

  it("maps engine errors to HTTP 400 responses", async () => {
    await post("/api/newgame", { width: 2, height: 1, k: 2, human_seat: "P1" });
    const { status, data } = await post("/api/move", { col: 7 });
    expect(status).toBe(400);
    expect(data.type).toBe("error");
    expect(data.code).toBe("IllegalMove");
  });

  it("serves the board page", async () => {
    const response = await fetch(base + "/");
    expect(response.status).toBe(200);
    const html = await response.text();
    expect(html).toContain("Misère Connect-k");
    expect(html).toContain('src="./client.js"');
  });
});
