// Contract: the curve chart plots exactly the fixture points and marks the
// service-chosen optimum; no client-side recomputation.

import { afterEach, describe, expect, it, vi } from "vitest";

import { ApiClient } from "../src/api.js";
import { gridValues, renderCurveChart, SweepView } from "../src/views/sweep.js";
import { SWEEP_FIXTURE } from "./fixtures.js";
import { mockFetch, text } from "./helpers.js";

afterEach(() => vi.unstubAllGlobals());

describe("sweep chart", () => {
  it("plots one point per fixture point with its probability", () => {
    const svg = renderCurveChart(SWEEP_FIXTURE);
    const circles = svg.querySelectorAll(".curve-point");
    expect(circles).toHaveLength(SWEEP_FIXTURE.points.length);
    const plotted = [...circles].map((c) => ({
      value: Number(c.getAttribute("data-value")),
      probability: Number(c.getAttribute("data-probability")),
    }));
    expect(plotted).toEqual(
      SWEEP_FIXTURE.points.map((p) => ({ value: p.value, probability: p.probability })),
    );
  });

  it("marks the optimum", () => {
    const svg = renderCurveChart(SWEEP_FIXTURE);
    expect(svg.querySelector('[data-field="optimal-marker"]')).not.toBeNull();
  });
});

describe("sweep view", () => {
  it("requests the grid and shows the service optimum verbatim", async () => {
    const { log } = mockFetch({ "GET /api/sweep": SWEEP_FIXTURE });
    const view = new SweepView(new ApiClient(), () => undefined);
    await view.refresh();
    expect(log[0]!.path).toContain("parameter=tank");
    expect(text(view.el, '[data-field="optimal"]')).toBe(
      "Smallest tank on the plateau: 50 L (0.050 m³) at 66.7%",
    );
  });

  it("slider change triggers a new sweep request", async () => {
    const { log } = mockFetch({ "GET /api/sweep": SWEEP_FIXTURE });
    const view = new SweepView(new ApiClient(), () => undefined);
    await view.refresh();
    const slider = view.el.querySelector('input[name="maxVolume"]') as HTMLInputElement;
    slider.value = "30000";
    slider.dispatchEvent(new Event("change"));
    await vi.waitFor(() => expect(log.length).toBe(2));
    expect(decodeURIComponent(log[1]!.path)).toContain("30000");
  });
});

describe("grid construction", () => {
  it("builds an ascending grid ending at the maximum", () => {
    const values = gridValues(20000, 16);
    expect(values).toHaveLength(16);
    expect(values[values.length - 1]).toBe(20000);
    expect([...values].sort((a, b) => a - b)).toEqual(values);
  });
});
