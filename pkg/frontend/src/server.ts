/** HTTP facade over the engine bridge plus the static board UI.
 * The server owns one engine session; the browser stays stateless and
 * re-renders from whatever snapshot the last response carried. */

import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import express, { type Express } from "express";

import { EngineBridge } from "./bridge.js";
import type { EngineResponse, Seat, StrategyName } from "./types.js";
import { validateConfig } from "./view.js";

const STRATEGIES: StrategyName[] = [
  "auto",
  "take-even",
  "delayed-take-even",
  "pair",
  "k2",
  "automata",
  "solver",
];

export function createApp(bridge: EngineBridge): Express {
  const app = express();
  app.use(express.json());

  const send = (res: express.Response, response: EngineResponse) => {
    res.status(response.type === "error" ? 400 : 200).json(response);
  };

  app.post("/api/newgame", async (req, res) => {
    const width = Number(req.body?.width);
    const height = Number(req.body?.height);
    const k = Number(req.body?.k);
    const humanSeat: Seat = req.body?.human_seat === "P2" ? "P2" : "P1";
    const strategy: StrategyName = STRATEGIES.includes(req.body?.strategy)
      ? req.body.strategy
      : "auto";
    const problem = validateConfig(width, height, k);
    if (problem) {
      res.status(400).json({ type: "error", code: "BadConfig", msg: problem, snapshot: null });
      return;
    }
    const engineSeat: Seat = humanSeat === "P1" ? "P2" : "P1";
    const reply = await bridge.request({
      type: "newgame",
      width,
      height,
      k,
      engine_seat: engineSeat,
      strategy,
    });
    if (reply.type === "error") {
      send(res, reply);
      return;
    }
    const prediction = await bridge.request({ type: "outcome" });
    res.json({ reply, prediction, human_seat: humanSeat });
  });

  app.post("/api/move", async (req, res) => {
    send(res, await bridge.request({ type: "move", col: Number(req.body?.col) }));
  });

  app.post("/api/hint", async (_req, res) => {
    send(res, await bridge.request({ type: "hint" }));
  });

  app.post("/api/resign", async (_req, res) => {
    send(res, await bridge.request({ type: "resign" }));
  });

  app.get("/api/state", async (_req, res) => {
    send(res, await bridge.request({ type: "state" }));
  });

  app.get("/api/outcome", async (_req, res) => {
    send(res, await bridge.request({ type: "outcome" }));
  });

  const publicDir = join(dirname(fileURLToPath(import.meta.url)), "..", "public");
  app.use(express.static(publicDir));
  return app;
}

const isMain = process.argv[1] && import.meta.url === `file://${process.argv[1]}`;
if (isMain) {
  const port = Number(process.env.PORT ?? 8350);
  const bridge = new EngineBridge();
  const app = createApp(bridge);
  app.listen(port, () => {
    console.log(`misère connect-k board at http://localhost:${port}`);
  });
}
