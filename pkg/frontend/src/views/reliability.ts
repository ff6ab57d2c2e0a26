// System & Reliability view: spec display, the reliability gauge with its
// qualitative label, and the smaller/current/larger tank comparison cards.

import type { ApiClient } from "../api.js";
import { clear, el } from "../dom.js";
import {
  formatCounts,
  formatLiters,
  formatPercent,
  labelColor,
  labelText,
} from "../format.js";
import { LatestWins } from "../latest.js";
import type { ReliabilityOut, SystemOut, VariantsOut } from "../types.js";

export class ReliabilityView {
  readonly el: HTMLElement;
  private readonly latest = new LatestWins();

  constructor(
    private readonly api: ApiClient,
    private readonly onError: (error: unknown) => void,
  ) {
    this.el = el("section", { class: "view view-reliability" });
  }

  async refresh(): Promise<void> {
    await this.latest.run(
      async () => {
        const [system, reliability, variants] = await Promise.all([
          this.api.getSystem(),
          this.api.getReliability(),
          this.api.getVariants(0.25),
        ]);
        return { system, reliability, variants };
      },
      (data) => this.render(data.system, data.reliability, data.variants),
      this.onError,
    );
  }

  private render(
    system: SystemOut,
    reliability: ReliabilityOut,
    variants: VariantsOut,
  ): void {
    clear(this.el);

    const spec = system.spec;
    const demandText =
      system.demand.constantLPerDay !== null
        ? `${system.demand.constantLPerDay} L/day`
        : "dated schedule";
    this.el.append(
      el(
        "div",
        { class: "card spec-card" },
        el("h2", { text: `System: ${system.name}` }),
        el("dl", {},
          el("dt", { text: "Catchment area" }),
          el("dd", { "data-field": "catchment", text: `${spec.catchmentAreaM2} m²` }),
          el("dt", { text: "Runoff coefficient" }),
          el("dd", { "data-field": "runoff", text: String(spec.runoffCoeff) }),
          el("dt", { text: "Tank volume" }),
          el("dd", { "data-field": "tank", text: formatLiters(spec.tankVolumeL) }),
          el("dt", { text: "Demand" }),
          el("dd", { "data-field": "demand", text: demandText }),
        ),
      ),
    );

    const gauge = el(
      "div",
      { class: "card gauge-card" },
      el("h2", { text: "Reliability" }),
      el("div", {
        class: "gauge-value",
        "data-field": "percent",
        text: formatPercent(reliability.percent),
      }),
      el("div", {
        class: "gauge-label",
        "data-field": "label",
        text: labelText(reliability.label),
      }),
      el("div", {
        class: "gauge-counts",
        "data-field": "counts",
        text: formatCounts(reliability.successDays, reliability.demandDays),
      }),
      el("div", {
        class: "gauge-window",
        text: `${reliability.windowStart} .. ${reliability.windowEnd}`,
      }),
    );
    (gauge.querySelector(".gauge-label") as HTMLElement).style.color =
      labelColor(reliability.label);
    if (reliability.warnings.length) {
      gauge.append(
        el("div", {
          class: "gauge-warnings",
          text: `warnings: ${reliability.warnings.join(", ")}`,
        }),
      );
    }
    this.el.append(gauge);

    const cards = el("div", { class: "variant-cards" });
    const entries: Array<[string, ReliabilityOut]> = [
      [`-${variants.fraction * 100}%`, variants.smaller],
      ["current", variants.current],
      [`+${variants.fraction * 100}%`, variants.larger],
    ];
    for (const [tag, report] of entries) {
      const card = el(
        "div",
        { class: "card variant-card", "data-variant": tag },
        el("h3", { text: tag }),
        el("div", { class: "variant-volume", text: formatLiters(report.tankVolumeL) }),
        el("div", { class: "variant-percent", text: formatPercent(report.percent) }),
        el("div", { class: "variant-label", text: labelText(report.label) }),
      );
      (card.querySelector(".variant-label") as HTMLElement).style.color =
        labelColor(report.label);
      cards.append(card);
    }
    this.el.append(
      el("h2", { text: `Tank variants (±${variants.fraction * 100}%)` }),
      cards,
    );
  }
}
