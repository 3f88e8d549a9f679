/**
 * View state and the projection rule.
 *
 * Everything drawn is a pure function of (latest frame, view state); the
 * view holds nothing mathematical. Hovering a unit projects that unit's
 * heatmap onto the output panel; otherwise the output unit itself shows.
 */

import type { Frame } from "./protocol.js";
import { heatmapToRgba } from "./palette.js";

export const PANEL_IDS = ["controls", "diagram", "output", "chart"] as const;
export type PanelId = (typeof PANEL_IDS)[number];

export const PANEL_LABELS: Record<PanelId, string> = {
  controls: "Controls",
  diagram: "Network diagram",
  output: "Output panel",
  chart: "Loss chart",
};

export interface ViewState {
  hovered: string | null;
  hiddenPanels: Set<string>;
  playing: boolean;
}

export function initialViewState(): ViewState {
  return { hovered: null, hiddenPanels: new Set(), playing: false };
}

export function isPanelHidden(view: ViewState, id: PanelId): boolean {
  return view.hiddenPanels.has(id);
}

/** Which unit the output panel should display. */
export function projectionUnit(view: ViewState): string {
  return view.hovered ?? "out";
}

export interface Projection {
  unit: string;
  resolution: number;
  rgba: Uint8ClampedArray<ArrayBuffer>;
}

/**
 * Pixel buffer for the output panel: the projected unit's engine-provided
 * grid after colorization. Returns null when the frame carries no grid for
 * that unit (the caller keeps the previous image until a richer frame
 * arrives).
 */
export function projectionBuffer(frame: Frame, unit: string): Projection | null {
  const values = frame.heatmaps[unit];
  if (!values) return null;
  const resolution = Math.round(Math.sqrt(values.length));
  if (resolution * resolution !== values.length || resolution < 1) return null;
  return { unit, resolution, rgba: heatmapToRgba(values, resolution) };
}
