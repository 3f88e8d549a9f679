/**
 * Engine protocol types and the HTTP transport.
 *
 * The engine speaks line-oriented JSON: a command document in, a frame
 * document out. Frames echo the canonical state string, the flat weight
 * and bias arrays (in the engine's deterministic build order), the loss
 * tail, optional per-unit heatmap grids, and the dataset points. Numbers
 * that diverged to nan/inf arrive as null.
 */

export type LossRow = [number, number | null, number | null];
export type DataRow = [number, number, number, boolean];

export interface Frame {
  epoch: number;
  running: boolean;
  state: string;
  weights: (number | null)[];
  biases: (number | null)[];
  loss: LossRow[];
  heatmaps: Record<string, (number | null)[]>;
  data: DataRow[];
  error?: string;
}

export type Command =
  | { cmd: "play" }
  | { cmd: "pause" }
  | { cmd: "step" }
  | { cmd: "reset" }
  | { cmd: "set_config"; state: string }
  | { cmd: "set_param"; key: string; value: string | number }
  | { cmd: "get_frame"; heatmap_resolution?: number };

/** Anything that can carry command documents to one engine session. */
export interface EngineTransport {
  send(command: Command): Promise<Frame>;
}

/** POST /command against the playnn HTTP server. */
export class HttpTransport implements EngineTransport {
  constructor(private readonly endpoint: string = "/command") {}

  async send(command: Command): Promise<Frame> {
    const response = await fetch(this.endpoint, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(command),
    });
    if (!response.ok) {
      throw new Error(`engine transport failure: HTTP ${response.status}`);
    }
    return (await response.json()) as Frame;
  }
}
