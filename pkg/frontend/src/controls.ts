/**
 * The hyperparameter control panel and the panel-visibility checkboxes.
 *
 * Exactly one control per configuration field. Every change is routed to
 * the engine (set_param); controls never mutate anything locally — they
 * re-populate from the canonical state echo in the next frame.
 */

import { ControlValues, FEATURE_IDS, FEATURE_LABELS, canonicalFeatureList } from "./statestring.js";
import { PANEL_IDS, PANEL_LABELS, PanelId } from "./view.js";

export interface ControlHooks {
  /** One grammar key, one value string, straight into set_param. */
  onParam(key: string, value: string): void;
}

const LEARNING_RATES = ["0.00001", "0.0001", "0.001", "0.003", "0.01",
                        "0.03", "0.1", "0.3", "1", "3", "10"];
const REG_RATES = ["0", "0.001", "0.003", "0.01", "0.03", "0.1", "0.3", "1", "3", "10"];

const SELECTS: Array<{ key: string; label: string; options: [string, string][] }> = [
  { key: "problem", label: "Problem", options: [["class", "Classification"], ["reg", "Regression"]] },
  { key: "ds", label: "Dataset", options: [
    ["gauss", "Two gaussians"], ["xor", "XOR quadrants"], ["circle", "Circle"],
    ["spiral", "Spiral"], ["plane", "Plane (reg)"], ["gaussreg", "Bumps (reg)"]] },
  { key: "lr", label: "Learning rate", options: LEARNING_RATES.map((v) => [v, v]) },
  { key: "act", label: "Activation", options: [
    ["tanh", "tanh"], ["relu", "ReLU"], ["sigmoid", "sigmoid"], ["linear", "linear"]] },
  { key: "reg", label: "Regularization", options: [["none", "None"], ["l1", "L1"], ["l2", "L2"]] },
  { key: "rr", label: "Reg rate", options: REG_RATES.map((v) => [v, v]) },
];

const RANGES: Array<{ key: string; label: string; min: number; max: number }> = [
  { key: "noise", label: "Noise", min: 0, max: 50 },
  { key: "split", label: "Train split %", min: 10, max: 90 },
  { key: "bs", label: "Batch size", min: 1, max: 30 },
];

export function buildControls(doc: Document, hooks: ControlHooks): void {
  const panel = doc.getElementById("panel-controls");
  if (!panel) return;
  panel.innerHTML = "";

  for (const spec of SELECTS) {
    const holder = doc.createElement("label");
    holder.className = "control";
    holder.append(spec.label);
    const select = doc.createElement("select");
    select.id = `control-${spec.key}`;
    for (const [value, text] of spec.options) {
      const option = doc.createElement("option");
      option.value = value;
      option.textContent = text;
      select.appendChild(option);
    }
    select.addEventListener("change", () => hooks.onParam(spec.key, select.value));
    holder.appendChild(select);
    panel.appendChild(holder);
  }

  for (const spec of RANGES) {
    const holder = doc.createElement("label");
    holder.className = "control";
    holder.append(spec.label);
    const input = doc.createElement("input");
    input.type = "number";
    input.id = `control-${spec.key}`;
    input.min = String(spec.min);
    input.max = String(spec.max);
    input.addEventListener("change", () => hooks.onParam(spec.key, input.value));
    holder.appendChild(input);
    panel.appendChild(holder);
  }

  const seedHolder = doc.createElement("label");
  seedHolder.className = "control";
  seedHolder.append("Seed");
  const seed = doc.createElement("input");
  seed.type = "number";
  seed.id = "control-seed";
  seed.min = "0";
  seed.addEventListener("change", () => hooks.onParam("seed", seed.value));
  seedHolder.appendChild(seed);
  panel.appendChild(seedHolder);

  const layers = doc.createElement("div");
  layers.className = "control";
  layers.id = "control-layers";
  panel.appendChild(layers);

  const featureBar = doc.createElement("div");
  featureBar.className = "control";
  featureBar.id = "control-feat";
  featureBar.append("Features ");
  for (const fid of FEATURE_IDS) {
    const label = doc.createElement("label");
    label.className = "feature-toggle";
    const box = doc.createElement("input");
    box.type = "checkbox";
    box.id = `feature-${fid}`;
    box.addEventListener("change", () => {
      const chosen = FEATURE_IDS.filter((id) => {
        const el = doc.getElementById(`feature-${id}`) as HTMLInputElement | null;
        return el ? el.checked : false;
      });
      hooks.onParam("feat", canonicalFeatureList(chosen).join(","));
    });
    label.appendChild(box);
    label.append(FEATURE_LABELS[fid]);
    featureBar.appendChild(label);
  }
  panel.appendChild(featureBar);
}

/** Rebuild the per-layer stepper row for the current architecture. */
function renderLayerSteppers(doc: Document, values: ControlValues,
                             hooks: ControlHooks): void {
  const holder = doc.getElementById("control-layers");
  if (!holder) return;
  holder.innerHTML = "";
  const commit = (sizes: number[]) => hooks.onParam("layers", sizes.join(","));

  holder.append(`Hidden layers (${values.layers.length}) `);
  const addLayer = doc.createElement("button");
  addLayer.id = "layers-add";
  addLayer.textContent = "+";
  addLayer.disabled = values.layers.length >= 6;
  addLayer.addEventListener("click", () => commit([...values.layers, 4]));
  const dropLayer = doc.createElement("button");
  dropLayer.id = "layers-drop";
  dropLayer.textContent = "−";
  dropLayer.disabled = values.layers.length === 0;
  dropLayer.addEventListener("click", () => commit(values.layers.slice(0, -1)));
  holder.append(addLayer, dropLayer);

  values.layers.forEach((size, index) => {
    const row = doc.createElement("span");
    row.className = "layer-stepper";
    const down = doc.createElement("button");
    down.textContent = "−";
    down.disabled = size <= 1;
    down.addEventListener("click", () => {
      const sizes = [...values.layers];
      sizes[index] = size - 1;
      commit(sizes);
    });
    const up = doc.createElement("button");
    up.textContent = "+";
    up.disabled = size >= 8;
    up.addEventListener("click", () => {
      const sizes = [...values.layers];
      sizes[index] = size + 1;
      commit(sizes);
    });
    row.append(` ${size} units `, down, up);
    holder.appendChild(row);
  });
}

/** Push the canonical state echo back into every control. */
export function updateControls(doc: Document, values: ControlValues,
                               hooks: ControlHooks): void {
  const set = (key: string, value: string) => {
    const el = doc.getElementById(`control-${key}`) as
      HTMLSelectElement | HTMLInputElement | null;
    if (!el) return;
    if (el instanceof HTMLSelectElement
        && ![...el.options].some((o) => o.value === value)) {
      const extra = doc.createElement("option");
      extra.value = value;
      extra.textContent = value;
      el.appendChild(extra); // value from a shared link outside the preset list
    }
    el.value = value;
  };
  set("problem", values.problem);
  set("ds", values.ds);
  set("lr", String(values.lr));
  set("act", values.act);
  set("reg", values.reg);
  set("rr", String(values.rr));
  set("noise", String(values.noise));
  set("split", String(values.split));
  set("bs", String(values.bs));
  set("seed", String(values.seed));
  for (const fid of FEATURE_IDS) {
    const box = doc.getElementById(`feature-${fid}`) as HTMLInputElement | null;
    if (box) box.checked = values.feat.includes(fid);
  }
  renderLayerSteppers(doc, values, hooks);
}

export interface PanelHooks {
  onHiddenPanelsChange(hidden: string[]): void;
}

/** Checkboxes that hide individual UI panels (the ui= key of the state). */
export function buildPanelToggles(doc: Document, hooks: PanelHooks): void {
  const footer = doc.getElementById("panel-toggles");
  if (!footer) return;
  footer.innerHTML = "";
  footer.append("Hide: ");
  for (const id of PANEL_IDS) {
    const label = doc.createElement("label");
    const box = doc.createElement("input");
    box.type = "checkbox";
    box.id = `hide-${id}`;
    box.addEventListener("change", () => {
      const hidden = PANEL_IDS.filter((panelId) => {
        const el = doc.getElementById(`hide-${panelId}`) as HTMLInputElement | null;
        return el ? el.checked : false;
      });
      hooks.onHiddenPanelsChange(hidden);
    });
    label.appendChild(box);
    label.append(PANEL_LABELS[id]);
    footer.appendChild(label);
  }
}

export function updatePanelToggles(doc: Document, hidden: Set<string>): void {
  for (const id of PANEL_IDS) {
    const box = doc.getElementById(`hide-${id}`) as HTMLInputElement | null;
    if (box) box.checked = hidden.has(id);
    const panel = doc.getElementById(`panel-${id}`);
    if (panel) (panel as HTMLElement).hidden = hidden.has(id);
  }
}

export function applyPanelVisibility(doc: Document, hidden: Set<string>): void {
  updatePanelToggles(doc, hidden);
}

export function knownPanelIds(): readonly PanelId[] {
  return PANEL_IDS;
}
