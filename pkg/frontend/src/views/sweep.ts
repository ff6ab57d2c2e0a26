// Sweep view: a tank-size grid drives the live reliability curve with the
// service-reported optimum marked. The grid is user input; probabilities
// and the optimum come from the service untouched.

import type { ApiClient } from "../api.js";
import { clear, el, svgEl } from "../dom.js";
import { formatLiters, formatProbability } from "../format.js";
import { LatestWins } from "../latest.js";
import type { SweepOut } from "../types.js";

const CHART_WIDTH = 560;
const CHART_HEIGHT = 280;
const MARGIN = 40;

export function gridValues(maxVolume: number, points: number): number[] {
  // evenly spaced grid from one point's worth up to the slider maximum
  const step = maxVolume / points;
  return Array.from({ length: points }, (_, i) => Math.round((i + 1) * step));
}

export class SweepView {
  readonly el: HTMLElement;
  private readonly latest = new LatestWins();
  private readonly maxInput: HTMLInputElement;
  private readonly pointsInput: HTMLInputElement;
  private readonly chartHost: HTMLElement;
  private readonly summary: HTMLElement;

  constructor(
    private readonly api: ApiClient,
    private readonly onError: (error: unknown) => void,
    defaultMaxVolume = 20000,
  ) {
    this.maxInput = el("input", {
      type: "range",
      name: "maxVolume",
      min: "100",
      max: "50000",
      step: "100",
      value: String(defaultMaxVolume),
    });
    this.pointsInput = el("input", {
      type: "number",
      name: "points",
      min: "2",
      max: "48",
      value: "16",
    });
    this.chartHost = el("div", { class: "chart-host" });
    this.summary = el("div", { class: "sweep-summary" });

    for (const input of [this.maxInput, this.pointsInput]) {
      input.addEventListener("change", () => void this.refresh());
    }

    this.el = el(
      "section",
      { class: "view view-sweep" },
      el(
        "form",
        { class: "card sweep-form" },
        el("label", { text: "Largest tank to try [L] " }, this.maxInput),
        el("label", { text: "Grid points " }, this.pointsInput),
      ),
      this.chartHost,
      this.summary,
    );
  }

  async refresh(): Promise<void> {
    const values = gridValues(Number(this.maxInput.value), Number(this.pointsInput.value));
    await this.latest.run(
      () => this.api.getSweep(values),
      (sweep) => this.render(sweep),
      this.onError,
    );
  }

  private render(sweep: SweepOut): void {
    clear(this.chartHost);
    clear(this.summary);
    this.chartHost.append(renderCurveChart(sweep));
    if (sweep.optimal) {
      this.summary.append(
        el("div", {
          class: "card sweep-optimal",
          "data-field": "optimal",
          text:
            `Smallest tank on the plateau: ${formatLiters(sweep.optimal.tankVolumeL)} ` +
            `at ${formatProbability(sweep.optimal.probability)}`,
        }),
      );
    }
  }
}

export function renderCurveChart(sweep: SweepOut): SVGElement {
  const points = sweep.points;
  const xs = points.map((p) => p.value);
  const xMin = Math.min(...xs);
  const xMax = Math.max(...xs);
  const xSpan = xMax - xMin || 1;

  const toX = (v: number) =>
    MARGIN + ((v - xMin) / xSpan) * (CHART_WIDTH - 2 * MARGIN);
  const toY = (p: number) => CHART_HEIGHT - MARGIN - p * (CHART_HEIGHT - 2 * MARGIN);

  const svg = svgEl("svg", {
    viewBox: `0 0 ${CHART_WIDTH} ${CHART_HEIGHT}`,
    class: "sweep-chart",
    role: "img",
  });

  // axes and reference lines at 0%, 50%, 100%
  for (const frac of [0, 0.5, 1]) {
    svg.append(
      svgEl("line", {
        x1: String(MARGIN),
        x2: String(CHART_WIDTH - MARGIN),
        y1: String(toY(frac)),
        y2: String(toY(frac)),
        class: "gridline",
      }),
    );
    const tick = svgEl("text", {
      x: String(MARGIN - 6),
      y: String(toY(frac) + 4),
      "text-anchor": "end",
      class: "tick",
    });
    tick.textContent = `${frac * 100}%`;
    svg.append(tick);
  }

  const path = points
    .map((p, i) => `${i === 0 ? "M" : "L"}${toX(p.value)},${toY(p.probability)}`)
    .join(" ");
  svg.append(svgEl("path", { d: path, class: "curve", fill: "none" }));

  for (const point of points) {
    svg.append(
      svgEl("circle", {
        cx: String(toX(point.value)),
        cy: String(toY(point.probability)),
        r: "3",
        class: "curve-point",
        "data-value": String(point.value),
        "data-probability": String(point.probability),
      }),
    );
  }

  if (sweep.optimal) {
    svg.append(
      svgEl("circle", {
        cx: String(toX(sweep.optimal.tankVolumeL)),
        cy: String(toY(sweep.optimal.probability)),
        r: "6",
        class: "optimal-marker",
        "data-field": "optimal-marker",
      }),
    );
  }
  return svg;
}
