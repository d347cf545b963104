import { describe, expect, it } from "vitest";

import { pathData, renderChart, render3dPath, Series } from "../src/chart.js";

const demo: Series = {
  label: "demonstration",
  dt: 0.01,
  values: [0, 0.2, 0.6, 0.9, 1.0],
  dashed: true,
  color: "#444",
};

describe("chart rendering", () => {
  it("is a pure function of its inputs", () => {
    const a = renderChart([demo]);
    const b = renderChart([{ ...demo, values: [...demo.values] }]);
    expect(a).toBe(b);
  });

  it("marks dashed series with a dash pattern", () => {
    const svg = renderChart([demo, { ...demo, label: "solid", dashed: false, color: "#00f" }]);
    const dashes = svg.match(/stroke-dasharray/g) ?? [];
    expect(dashes.length).toBe(1);
  });

  it("identical data renders identical path geometry", () => {
    const scale = { tMax: 0.04, yMin: 0, yMax: 1 };
    const a = pathData(demo, scale, 560, 240);
    const b = pathData({ ...demo, label: "other", color: "#f00" }, scale, 560, 240);
    expect(a).toBe(b);
  });

  it("3d projection is deterministic", () => {
    const points = [
      [0, 0, 1],
      [0.5, 0.5, 0.5],
      [1, 1, 0],
    ];
    const a = render3dPath([{ points, color: "#000", label: "p" }]);
    expect(a).toBe(render3dPath([{ points, color: "#000", label: "p" }]));
    expect(a).toContain("<svg");
  });
});
