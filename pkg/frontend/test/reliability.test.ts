// Contract: every number the reliability view shows equals a fixture field.

import { afterEach, describe, expect, it, vi } from "vitest";

import { ApiClient } from "../src/api.js";
import { ReliabilityView } from "../src/views/reliability.js";
import {
  RELIABILITY_FIXTURE,
  SYSTEM_FIXTURE,
  VARIANTS_FIXTURE,
} from "./fixtures.js";
import { mockFetch, text } from "./helpers.js";

afterEach(() => vi.unstubAllGlobals());

async function renderView(): Promise<ReliabilityView> {
  mockFetch({
    "GET /api/system": SYSTEM_FIXTURE,
    "GET /api/reliability": RELIABILITY_FIXTURE,
    "GET /api/variants": VARIANTS_FIXTURE,
  });
  const view = new ReliabilityView(new ApiClient(), () => {
    throw new Error("unexpected error callback");
  });
  await view.refresh();
  return view;
}

describe("reliability view", () => {
  it("shows the fixture percent and label verbatim", async () => {
    const view = await renderView();
    expect(text(view.el, '[data-field="percent"]')).toBe(
      `${RELIABILITY_FIXTURE.percent}%`,
    );
    expect(text(view.el, '[data-field="label"]')).toBe(RELIABILITY_FIXTURE.label);
    expect(text(view.el, '[data-field="counts"]')).toBe(
      `${RELIABILITY_FIXTURE.successDays}/${RELIABILITY_FIXTURE.demandDays} demand days met`,
    );
  });

  it("shows the system spec with dual liters/m3 volume", async () => {
    const view = await renderView();
    expect(text(view.el, '[data-field="catchment"]')).toContain("10 m²");
    expect(text(view.el, '[data-field="tank"]')).toBe("100 L (0.100 m³)");
    expect(text(view.el, '[data-field="demand"]')).toBe("30 L/day");
  });

  it("renders the three variant cards with fixture volumes and labels", async () => {
    const view = await renderView();
    const cards = view.el.querySelectorAll(".variant-card");
    expect(cards).toHaveLength(3);
    const volumes = [...cards].map((c) => text(c, ".variant-volume"));
    expect(volumes).toEqual([
      "75 L (0.075 m³)",
      "100 L (0.100 m³)",
      "125 L (0.125 m³)",
    ]);
    for (const card of cards) {
      expect(text(card, ".variant-percent")).toBe("67%");
      expect(text(card, ".variant-label")).toBe("Fair");
    }
  });

  it("surfaces machine-readable warnings", async () => {
    const view = await renderView();
    expect(text(view.el, ".gauge-warnings")).toContain("short-history");
  });
});
