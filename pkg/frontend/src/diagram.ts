/**
 * Pure layout math for the network diagram.
 *
 * Unit ids and link order mirror the engine's build order exactly
 * (features, then h<layer>_<unit> rows, then "out"; links layer by layer,
 * destination by destination, sources in order), so the flat weight array
 * in a frame can be addressed positionally.
 */

export interface LinkSpec {
  index: number;   // position in frame.weights
  source: string;
  dest: string;
}

export const OUTPUT_UNIT = "out";

/** Unit ids per column: [features, hidden layers..., output]. */
export function unitColumns(feat: string[], layers: number[]): string[][] {
  const columns: string[][] = [feat.slice()];
  layers.forEach((size, depth) => {
    const ids: string[] = [];
    for (let unit = 1; unit <= size; unit++) ids.push(`h${depth + 1}_${unit}`);
    columns.push(ids);
  });
  columns.push([OUTPUT_UNIT]);
  return columns;
}

/** Links in engine build order, indexed into the frame's weight array. */
export function linkOrder(columns: string[][]): LinkSpec[] {
  const links: LinkSpec[] = [];
  let index = 0;
  for (let layer = 1; layer < columns.length; layer++) {
    for (const dest of columns[layer]) {
      for (const source of columns[layer - 1]) {
        links.push({ index, source, dest });
        index++;
      }
    }
  }
  return links;
}

export const WEIGHT_WIDTH_CAP = 5;   // |w| at which curves stop thickening
const HAIRLINE_PX = 0.75;
const MAX_WIDTH_PX = 6;

/** Curve width in px: hairline at w=0, growing with |w|, capped at |w|=5. */
export function linkWidth(weight: number | null): number {
  if (weight === null) return HAIRLINE_PX;
  const magnitude = Math.min(Math.abs(weight), WEIGHT_WIDTH_CAP);
  return HAIRLINE_PX + (MAX_WIDTH_PX - HAIRLINE_PX) * (magnitude / WEIGHT_WIDTH_CAP);
}

export interface DiagramGeometry {
  width: number;
  height: number;
  position: Map<string, { x: number; y: number }>; // box centers
  boxSize: number;
}

/** Grid positions for unit boxes: columns left to right, units top down. */
export function layoutColumns(
  columns: string[][],
  boxSize = 44,
  hGap = 72,
  vGap = 14,
): DiagramGeometry {
  const tallest = Math.max(...columns.map((c) => c.length));
  const height = tallest * (boxSize + vGap) + vGap;
  const width = columns.length * (boxSize + hGap) - hGap;
  const position = new Map<string, { x: number; y: number }>();
  columns.forEach((column, col) => {
    const columnHeight = column.length * (boxSize + vGap) - vGap;
    const top = (height - columnHeight) / 2;
    column.forEach((id, row) => {
      position.set(id, {
        x: col * (boxSize + hGap) + boxSize / 2,
        y: top + row * (boxSize + vGap) + boxSize / 2,
      });
    });
  });
  return { width, height, position, boxSize };
}

/** SVG path for a link curve between two unit box centers. */
export function linkPath(
  from: { x: number; y: number },
  to: { x: number; y: number },
  boxSize: number,
): string {
  const x1 = from.x + boxSize / 2;
  const x2 = to.x - boxSize / 2;
  const mid = (x1 + x2) / 2;
  return `M${x1},${from.y} C${mid},${from.y} ${mid},${to.y} ${x2},${to.y}`;
}
