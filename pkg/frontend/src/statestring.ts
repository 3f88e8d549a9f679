/**
 * Reader for the engine's state-string grammar.
 *
 * The UI never interprets raw user fragments itself: it sends them to the
 * engine verbatim (set_config) and reads back the canonical echo. This
 * parser only has to split that canonical `#key=value&...` form so controls
 * can display the current configuration. Clamping, defaults for missing
 * keys, and validation all stay on the engine side.
 */

export interface ControlValues {
  problem: string;        // "class" | "reg" (grammar tokens)
  ds: string;
  noise: number;
  split: number;
  bs: number;
  lr: number;
  act: string;
  reg: string;
  rr: number;
  layers: number[];
  feat: string[];
  seed: number;
  ui: string[];
}

export const FEATURE_IDS = ["x1", "x2", "x1sq", "x2sq", "x1x2", "sinx1", "sinx2"];

export const FEATURE_LABELS: Record<string, string> = {
  x1: "x₁",
  x2: "x₂",
  x1sq: "x₁²",
  x2sq: "x₂²",
  x1x2: "x₁x₂",
  sinx1: "sin(πx₁)",
  sinx2: "sin(πx₂)",
};

const DEFAULTS: ControlValues = {
  problem: "class",
  ds: "gauss",
  noise: 0,
  split: 50,
  bs: 10,
  lr: 0.03,
  act: "tanh",
  reg: "none",
  rr: 0,
  layers: [4, 2],
  feat: ["x1", "x2"],
  seed: 42,
  ui: [],
};

export function parseStateString(text: string): ControlValues {
  const values: ControlValues = {
    ...DEFAULTS,
    layers: [...DEFAULTS.layers],
    feat: [...DEFAULTS.feat],
    ui: [...DEFAULTS.ui],
  };
  const body = text.startsWith("#") ? text.slice(1) : text;
  for (const segment of body.split("&")) {
    if (segment === "") continue;
    const eq = segment.indexOf("=");
    if (eq < 0) continue; // engine echoes are always well-formed
    const key = segment.slice(0, eq);
    const value = segment.slice(eq + 1);
    switch (key) {
      case "problem": values.problem = value; break;
      case "ds": values.ds = value; break;
      case "noise": values.noise = Number(value); break;
      case "split": values.split = Number(value); break;
      case "bs": values.bs = Number(value); break;
      case "lr": values.lr = Number(value); break;
      case "act": values.act = value; break;
      case "reg": values.reg = value; break;
      case "rr": values.rr = Number(value); break;
      case "seed": values.seed = Number(value); break;
      case "layers":
        values.layers = value === "" ? [] : value.split(",").map(Number);
        break;
      case "feat":
        values.feat = value === "" ? [] : value.split(",");
        break;
      case "ui":
        values.ui = value === "" ? [] : value.split(",");
        break;
    }
  }
  return values;
}

/** Order a feature-id set into canonical palette order for set_param. */
export function canonicalFeatureList(ids: Iterable<string>): string[] {
  const present = new Set(ids);
  return FEATURE_IDS.filter((fid) => present.has(fid));
}
