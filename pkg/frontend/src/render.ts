/**
 * Panel painters. Thin by design: all geometry, color, and ordering math
 * lives in diagram.ts / palette.ts / losschart.ts / view.ts, and every
 * canvas call is guarded so the painters degrade to no-ops where 2D
 * contexts are unavailable (e.g. jsdom).
 */

import { cssColor, heatmapToRgba, labelColor } from "./palette.js";
import {
  DiagramGeometry,
  linkOrder,
  linkPath,
  linkWidth,
  layoutColumns,
  unitColumns,
} from "./diagram.js";
import { lossPaths } from "./losschart.js";
import type { Frame } from "./protocol.js";
import { FEATURE_IDS, FEATURE_LABELS, ControlValues } from "./statestring.js";
import { Projection } from "./view.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export const SKELETON_HTML = `
<header id="transport-bar">
  <button id="btn-reset" title="rebuild from the current configuration">&#8634;</button>
  <button id="btn-play"></button>
  <button id="btn-step" title="run one epoch">&#9197;</button>
  <span id="epoch-label"></span>
  <span id="notice" hidden></span>
</header>
<section id="panel-controls" class="panel"></section>
<main id="columns">
  <section id="panel-diagram" class="panel">
    <div id="diagram-wrap">
      <svg id="links-svg"></svg>
      <div id="units-layer"></div>
    </div>
  </section>
  <section id="panel-output" class="panel">
    <h3 id="projection-label"></h3>
    <canvas id="output-canvas" width="300" height="300"></canvas>
    <div id="output-legend"></div>
  </section>
  <section id="panel-chart" class="panel">
    <h3>Loss</h3>
    <svg id="loss-svg" viewBox="0 0 260 120" width="260" height="120"></svg>
    <div id="loss-label"></div>
  </section>
</main>
<footer id="panel-toggles"></footer>
`;

export function buildSkeleton(root: HTMLElement): void {
  root.innerHTML = SKELETON_HTML;
}

function clear(element: Element): void {
  while (element.firstChild) element.removeChild(element.firstChild);
}

/** Paint one unit's grid onto a box canvas, upscaling to the box size. */
function paintGrid(
  canvas: HTMLCanvasElement,
  values: (number | null)[] | undefined,
  resolution: number,
): void {
  const ctx = canvas.getContext && canvas.getContext("2d");
  if (!ctx) return;
  if (!values || typeof ImageData === "undefined") {
    ctx.fillStyle = cssColor(0);
    ctx.fillRect(0, 0, canvas.width, canvas.height);
    return;
  }
  const doc = canvas.ownerDocument;
  const cell = doc.createElement("canvas");
  cell.width = resolution;
  cell.height = resolution;
  const cellCtx = cell.getContext("2d");
  if (!cellCtx) return;
  cellCtx.putImageData(
    new ImageData(heatmapToRgba(values, resolution), resolution, resolution), 0, 0);
  ctx.imageSmoothingEnabled = true;
  ctx.drawImage(cell, 0, 0, canvas.width, canvas.height);
}

export interface DiagramHooks {
  onHover(unit: string | null): void;
  onToggleFeature(fid: string): void;
}

export interface GridCache {
  resolution: number;
  grids: Record<string, (number | null)[]>;
}

/**
 * Network diagram: all seven features at the left (disabled ones faded),
 * hidden units as heatmap thumbnails, link curves colored by weight sign
 * with width growing by |w| up to the cap.
 */
export function renderDiagram(
  doc: Document,
  frame: Frame,
  values: ControlValues,
  thumbs: GridCache | null,
  hooks: DiagramHooks,
): void {
  const svg = doc.getElementById("links-svg");
  const unitsLayer = doc.getElementById("units-layer");
  const wrap = doc.getElementById("diagram-wrap");
  if (!svg || !unitsLayer || !wrap) return;

  const archColumns = unitColumns(values.feat, values.layers);
  const displayColumns = [FEATURE_IDS.slice(), ...archColumns.slice(1)];
  const geometry = layoutColumns(displayColumns);

  (wrap as HTMLElement).style.width = `${geometry.width}px`;
  (wrap as HTMLElement).style.height = `${geometry.height}px`;
  svg.setAttribute("viewBox", `0 0 ${geometry.width} ${geometry.height}`);
  svg.setAttribute("width", String(geometry.width));
  svg.setAttribute("height", String(geometry.height));

  clear(svg);
  for (const link of linkOrder(archColumns)) {
    const from = geometry.position.get(link.source);
    const to = geometry.position.get(link.dest);
    if (!from || !to) continue;
    const weight = frame.weights[link.index] ?? null;
    const path = doc.createElementNS(SVG_NS, "path");
    path.setAttribute("d", linkPath(from, to, geometry.boxSize));
    path.setAttribute("fill", "none");
    path.setAttribute("stroke", weight === null || weight === 0
      ? cssColor(0)
      : cssColor(weight > 0 ? 1 : -1));
    path.setAttribute("stroke-width", linkWidth(weight).toFixed(2));
    path.setAttribute("stroke-opacity", "0.75");
    svg.appendChild(path);
  }

  clear(unitsLayer);
  const enabled = new Set(values.feat);
  displayColumns.forEach((column, columnIndex) => {
    for (const id of column) {
      const pos = geometry.position.get(id);
      if (!pos) continue;
      const isFeature = columnIndex === 0;
      const active = !isFeature || enabled.has(id);
      const box = doc.createElement("div");
      box.className = "unit-box" + (active ? "" : " faded");
      box.dataset.unit = id;
      box.style.left = `${pos.x - geometry.boxSize / 2}px`;
      box.style.top = `${pos.y - geometry.boxSize / 2}px`;
      box.style.width = `${geometry.boxSize}px`;
      box.style.height = `${geometry.boxSize}px`;
      box.title = isFeature ? FEATURE_LABELS[id] ?? id : id;

      if (active) {
        const canvas = doc.createElement("canvas");
        canvas.width = geometry.boxSize;
        canvas.height = geometry.boxSize;
        paintGrid(canvas, thumbs?.grids[id], thumbs?.resolution ?? 1);
        box.appendChild(canvas);
        box.addEventListener("mouseenter", () => hooks.onHover(id));
        box.addEventListener("mouseleave", () => hooks.onHover(null));
      }
      if (isFeature) {
        const label = doc.createElement("span");
        label.className = "feature-label";
        label.textContent = FEATURE_LABELS[id] ?? id;
        box.appendChild(label);
        box.addEventListener("click", () => hooks.onToggleFeature(id));
      }
      unitsLayer.appendChild(box);
    }
  });
}

/**
 * Output panel: the projected unit's heatmap (hovered unit, or the output
 * unit) overlaid with train and test points.
 */
export function renderOutput(
  doc: Document,
  frame: Frame,
  projection: Projection | null,
): void {
  const canvas = doc.getElementById("output-canvas") as HTMLCanvasElement | null;
  const label = doc.getElementById("projection-label");
  if (label) {
    label.textContent = projection && projection.unit !== "out"
      ? `Unit ${projection.unit}`
      : "Output";
  }
  if (!canvas) return;
  const ctx = canvas.getContext && canvas.getContext("2d");
  if (!ctx) return;

  ctx.fillStyle = cssColor(0);
  ctx.fillRect(0, 0, canvas.width, canvas.height);
  if (projection && typeof ImageData !== "undefined") {
    const cell = doc.createElement("canvas");
    cell.width = projection.resolution;
    cell.height = projection.resolution;
    const cellCtx = cell.getContext("2d");
    if (cellCtx) {
      cellCtx.putImageData(
        new ImageData(projection.rgba, projection.resolution, projection.resolution),
        0, 0);
      ctx.imageSmoothingEnabled = true;
      ctx.drawImage(cell, 0, 0, canvas.width, canvas.height);
    }
  }

  // data overlay: x1 right, x2 up; train points outlined dark, test white
  for (const [x1, x2, labelValue, isTrain] of frame.data) {
    const px = ((x1 + 1) / 2) * canvas.width;
    const py = ((1 - x2) / 2) * canvas.height;
    ctx.beginPath();
    ctx.arc(px, py, 3, 0, 2 * Math.PI);
    ctx.fillStyle = labelColor(labelValue);
    ctx.fill();
    ctx.lineWidth = 1;
    ctx.strokeStyle = isTrain ? "#555" : "#ffffff";
    ctx.stroke();
  }
}

export function renderChart(doc: Document, frame: Frame): void {
  const svg = doc.getElementById("loss-svg");
  const label = doc.getElementById("loss-label");
  if (!svg) return;
  clear(svg);
  const paths = lossPaths(frame.loss, 260, 120);
  const grid = doc.createElementNS(SVG_NS, "line");
  grid.setAttribute("x1", "0");
  grid.setAttribute("y1", "119.5");
  grid.setAttribute("x2", "260");
  grid.setAttribute("y2", "119.5");
  grid.setAttribute("stroke", "#ccc");
  svg.appendChild(grid);
  for (const [d, color, dash] of [
    [paths.trainPath, "#555", ""],
    [paths.testPath, "#999", "4 3"],
  ] as const) {
    if (!d) continue;
    const path = doc.createElementNS(SVG_NS, "path");
    path.setAttribute("d", d);
    path.setAttribute("fill", "none");
    path.setAttribute("stroke", color);
    path.setAttribute("stroke-width", "1.5");
    if (dash) path.setAttribute("stroke-dasharray", dash);
    svg.appendChild(path);
  }
  if (label) {
    const train = paths.lastTrain === null ? "–" : paths.lastTrain.toFixed(4);
    const test = paths.lastTest === null ? "–" : paths.lastTest.toFixed(4);
    label.textContent = `train ${train}   test ${test}`;
  }
}
