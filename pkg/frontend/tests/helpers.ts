/**
 * Test plumbing: a transport that talks to a real engine process over its
 * stdio pipe protocol, plus a tiny condition waiter for fire-and-forget
 * UI handlers.
 */

import { spawn, type ChildProcessWithoutNullStreams } from "node:child_process";
import { createInterface, type Interface } from "node:readline";
import type { Command, EngineTransport, Frame } from "../src/protocol.js";

/** Shipped scenario presets (state strings as published by the engine). */
export const PRESET_STATES: Record<string, string> = {
  fig1: "#problem=class&ds=circle&noise=0&split=50&bs=10&lr=0.03"
      + "&act=tanh&reg=none&rr=0&layers=4&feat=x1,x2&seed=42&ui=",
  fig2: "#problem=class&ds=spiral&noise=0&split=50&bs=10&lr=0.03"
      + "&act=tanh&reg=none&rr=0&layers=8,4"
      + "&feat=x1,x2,x1sq,x2sq,x1x2,sinx1,sinx2&seed=42&ui=",
  fig3: "#problem=class&ds=gauss&noise=0&split=50&bs=10&lr=0.03"
      + "&act=tanh&reg=none&rr=0&layers=8,8,8,8&feat=x1,x2&seed=42&ui=",
  fig4: "#problem=class&ds=circle&noise=0&split=50&bs=10&lr=10"
      + "&act=tanh&reg=none&rr=0&layers=8&feat=x1,x2&seed=42&ui=",
};

export class PipeTransport implements EngineTransport {
  private proc: ChildProcessWithoutNullStreams;
  private lines: Interface;
  private waiters: Array<(frame: Frame) => void> = [];

  constructor(state = "#") {
    this.proc = spawn("playnn", ["pipe", "--state", state], {
      stdio: ["pipe", "pipe", "inherit"],
    });
    this.lines = createInterface({ input: this.proc.stdout });
    this.lines.on("line", (line) => {
      const next = this.waiters.shift();
      if (next) next(JSON.parse(line) as Frame);
    });
  }

  send(command: Command): Promise<Frame> {
    this.proc.stdin.write(JSON.stringify(command) + "\n");
    return new Promise((resolve) => this.waiters.push(resolve));
  }

  close(): void {
    this.proc.stdin.end();
    this.proc.kill();
  }
}

export async function waitFor(
  condition: () => boolean,
  timeoutMs = 10_000,
): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  while (!condition()) {
    if (Date.now() > deadline) throw new Error("waitFor: condition never held");
    await new Promise((resolve) => setTimeout(resolve, 20));
  }
}
