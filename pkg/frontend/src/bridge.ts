/** Child-process bridge to the Python engine's stdio session protocol.
 * One JSON line out, exactly one JSON line back; requests are serialized
 * so a session never has more than one in flight. */

import { spawn, type ChildProcessWithoutNullStreams } from "node:child_process";
import { createInterface, type Interface } from "node:readline";

import type { EngineRequest, EngineResponse } from "./types.js";

const DEFAULT_COMMAND = ["python3", "-m", "misere_connect", "session"];

export class EngineBridge {
  private child: ChildProcessWithoutNullStreams;
  private reader: Interface;
  private pending: Array<{
    resolve: (response: EngineResponse) => void;
    reject: (err: Error) => void;
  }> = [];
  private chain: Promise<unknown> = Promise.resolve();
  private closed = false;

  constructor(command?: string[]) {
    const argv = command ?? envCommand() ?? DEFAULT_COMMAND;
    this.child = spawn(argv[0], argv.slice(1), { stdio: ["pipe", "pipe", "pipe"] });
    this.reader = createInterface({ input: this.child.stdout });
    this.reader.on("line", (line) => {
      const waiter = this.pending.shift();
      if (!waiter) return; // unsolicited output: engines never do this
      try {
        waiter.resolve(JSON.parse(line) as EngineResponse);
      } catch (err) {
        waiter.reject(new Error(`engine sent invalid JSON: ${line}`));
      }
    });
    this.child.on("exit", () => {
      this.closed = true;
      for (const waiter of this.pending.splice(0)) {
        waiter.reject(new Error("engine exited"));
      }
    });
  }

  request(message: EngineRequest): Promise<EngineResponse> {
    const send = () =>
      new Promise<EngineResponse>((resolve, reject) => {
        if (this.closed) {
          reject(new Error("engine is closed"));
          return;
        }
        this.pending.push({ resolve, reject });
        this.child.stdin.write(JSON.stringify(message) + "\n");
      });
    const next = this.chain.then(send, send);
    this.chain = next.catch(() => undefined);
    return next;
  }

  close(): void {
    this.closed = true;
    this.child.stdin.end();
    this.child.kill();
  }
}

function envCommand(): string[] | null {
  const raw = process.env.MISERE_ENGINE_CMD;
  if (!raw) return null;
  const parts = raw.split(/\s+/).filter(Boolean);
  return parts.length ? parts : null;
}
