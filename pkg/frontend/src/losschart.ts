/**
 * Loss-over-time chart math: frame loss tails to SVG polyline paths.
 */

import type { LossRow } from "./protocol.js";

export interface LossPaths {
  trainPath: string;
  testPath: string;
  maxLoss: number;
  lastTrain: number | null;
  lastTest: number | null;
}

function pathFor(
  series: LossRow[],
  pick: (row: LossRow) => number | null,
  width: number,
  height: number,
  maxLoss: number,
): string {
  const n = series.length;
  if (n === 0) return "";
  const step = n > 1 ? width / (n - 1) : 0;
  const parts: string[] = [];
  series.forEach((row, i) => {
    const value = pick(row);
    if (value === null) return; // gaps where the run diverged
    const x = n > 1 ? i * step : width / 2;
    const y = height - (value / maxLoss) * height;
    parts.push(`${parts.length === 0 ? "M" : "L"}${x.toFixed(1)},${y.toFixed(1)}`);
  });
  return parts.join(" ");
}

export function lossPaths(series: LossRow[], width: number, height: number): LossPaths {
  let maxLoss = 0;
  for (const [, train, test] of series) {
    if (train !== null && train > maxLoss) maxLoss = train;
    if (test !== null && test > maxLoss) maxLoss = test;
  }
  if (maxLoss <= 0) maxLoss = 1;
  const last = series.length > 0 ? series[series.length - 1] : undefined;
  return {
    trainPath: pathFor(series, (row) => row[1], width, height, maxLoss),
    testPath: pathFor(series, (row) => row[2], width, height, maxLoss),
    maxLoss,
    lastTrain: last ? last[1] : null,
    lastTest: last ? last[2] : null,
  };
}
