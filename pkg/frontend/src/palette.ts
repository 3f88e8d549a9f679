/**
 * The engine's sign palette, mirrored for client-side painting.
 *
 * Orange for negative responses, blue for positive, light gray at zero,
 * linear interpolation per channel with half-up rounding — the same
 * mapping the engine uses for its PPM export, so pixels painted here match
 * engine-rendered images bit for bit. Values arrive raw (unclipped);
 * anything outside [-1, 1] saturates, and null (a non-finite value on the
 * engine side) renders neutral.
 */

export type Rgb = [number, number, number];

export const COLOR_NEGATIVE: Rgb = [245, 147, 34];
export const COLOR_ZERO: Rgb = [232, 232, 232];
export const COLOR_POSITIVE: Rgb = [8, 119, 189];

function channel(zero: number, anchor: number, t: number): number {
  return Math.floor(zero + (anchor - zero) * t + 0.5);
}

export function colorOf(value: number | null): Rgb {
  if (value === null || Number.isNaN(value)) return [...COLOR_ZERO] as Rgb;
  const v = value < -1 ? -1 : value > 1 ? 1 : value;
  const anchor = v >= 0 ? COLOR_POSITIVE : COLOR_NEGATIVE;
  const t = Math.abs(v);
  return [
    channel(COLOR_ZERO[0], anchor[0], t),
    channel(COLOR_ZERO[1], anchor[1], t),
    channel(COLOR_ZERO[2], anchor[2], t),
  ];
}

export function cssColor(value: number | null): string {
  const [r, g, b] = colorOf(value);
  return `rgb(${r},${g},${b})`;
}

/**
 * Expand a flat row-major heatmap grid into an RGBA pixel buffer
 * (what gets handed to an ImageData of size resolution x resolution).
 */
export function heatmapToRgba(
  values: (number | null)[],
  resolution: number,
): Uint8ClampedArray<ArrayBuffer> {
  const rgba = new Uint8ClampedArray(resolution * resolution * 4);
  for (let i = 0; i < resolution * resolution; i++) {
    const [r, g, b] = colorOf(values[i] ?? null);
    rgba[4 * i] = r;
    rgba[4 * i + 1] = g;
    rgba[4 * i + 2] = b;
    rgba[4 * i + 3] = 255;
  }
  return rgba;
}

/** Label color for data points: +1 labels blue, -1 labels orange. */
export function labelColor(label: number): string {
  return cssColor(label >= 0 ? 1 : -1);
}
