import { describe, expect, it } from "vitest";
import { layoutColumns, linkOrder, linkWidth, unitColumns } from "../src/diagram.js";

describe("unitColumns", () => {
  it("mirrors the engine's unit naming", () => {
    const columns = unitColumns(["x1", "x2"], [4, 2]);
    expect(columns).toEqual([
      ["x1", "x2"],
      ["h1_1", "h1_2", "h1_3", "h1_4"],
      ["h2_1", "h2_2"],
      ["out"],
    ]);
  });

  it("degenerates to features plus output with no hidden layers", () => {
    expect(unitColumns(["x1x2"], [])).toEqual([["x1x2"], ["out"]]);
  });
});

describe("linkOrder", () => {
  it("walks destinations outer, sources inner, matching the weight array", () => {
    const links = linkOrder(unitColumns(["x1", "x2"], [4, 2]));
    expect(links.length).toBe(2 * 4 + 4 * 2 + 2 * 1);
    expect(links[0]).toEqual({ index: 0, source: "x1", dest: "h1_1" });
    expect(links[1]).toEqual({ index: 1, source: "x2", dest: "h1_1" });
    expect(links[2]).toEqual({ index: 2, source: "x1", dest: "h1_2" });
    expect(links[links.length - 1])
      .toEqual({ index: 17, source: "h2_2", dest: "out" });
  });
});

describe("linkWidth", () => {
  it("draws zero and null weights as hairlines", () => {
    expect(linkWidth(0)).toBeCloseTo(0.75, 6);
    expect(linkWidth(null)).toBeCloseTo(0.75, 6);
  });

  it("grows with magnitude and caps at |w| = 5", () => {
    expect(linkWidth(1)).toBeGreaterThan(linkWidth(0.5));
    expect(linkWidth(-2)).toEqual(linkWidth(2));
    expect(linkWidth(5)).toEqual(linkWidth(500));
    expect(linkWidth(500)).toBeLessThanOrEqual(6);
  });
});

describe("layoutColumns", () => {
  it("positions every unit inside the canvas with columns left to right", () => {
    const columns = unitColumns(["x1", "x2"], [3]);
    const geometry = layoutColumns(columns);
    const xs = columns.map((column) => geometry.position.get(column[0])!.x);
    expect(xs[0]).toBeLessThan(xs[1]);
    expect(xs[1]).toBeLessThan(xs[2]);
    for (const column of columns) {
      for (const id of column) {
        const pos = geometry.position.get(id)!;
        expect(pos.x).toBeGreaterThan(0);
        expect(pos.x).toBeLessThan(geometry.width);
        expect(pos.y).toBeGreaterThan(0);
        expect(pos.y).toBeLessThan(geometry.height);
      }
    }
  });
});
