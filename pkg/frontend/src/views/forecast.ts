// Forecast view: observed-water entry, strategy toggles (demand override,
// one-time purchase) and the pooled probability / minimum end water
// readout. Every number displayed comes from one service response.

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
import type { ForecastOut, StrategyIn } from "../types.js";

// the two studied drought responses as presets; inputs stay editable
const PRESET_OVERRIDE_L_PER_DAY = 75;
const PRESET_PURCHASE_L = 1000;

export class ForecastView {
  readonly el: HTMLElement;
  readonly requestCount = { value: 0 }; // observable in contract tests
  private readonly latest = new LatestWins();
  private readonly readout: HTMLElement;

  private readonly startInput: HTMLInputElement;
  private readonly waterInput: HTMLInputElement;
  private readonly horizonInput: HTMLInputElement;
  private readonly overrideToggle: HTMLInputElement;
  private readonly overrideInput: HTMLInputElement;
  private readonly purchaseToggle: HTMLInputElement;
  private readonly purchaseVolumeInput: HTMLInputElement;
  private readonly purchaseDayInput: HTMLInputElement;

  constructor(
    private readonly api: ApiClient,
    private readonly onError: (error: unknown) => void,
  ) {
    this.startInput = el("input", {
      type: "date",
      name: "start",
      value: new Date().toISOString().slice(0, 10),
    });
    this.waterInput = el("input", {
      type: "number",
      name: "observedWater",
      min: "0",
      step: "any",
      placeholder: "observed water [L]",
    });
    this.horizonInput = el("input", {
      type: "number",
      name: "horizon",
      min: "1",
      value: "30",
    });
    this.overrideToggle = el("input", { type: "checkbox", name: "overrideOn" });
    this.overrideInput = el("input", {
      type: "number",
      name: "overrideValue",
      min: "0",
      step: "any",
      value: String(PRESET_OVERRIDE_L_PER_DAY),
    });
    this.purchaseToggle = el("input", { type: "checkbox", name: "purchaseOn" });
    this.purchaseVolumeInput = el("input", {
      type: "number",
      name: "purchaseVolume",
      min: "0",
      step: "any",
      value: String(PRESET_PURCHASE_L),
    });
    this.purchaseDayInput = el("input", {
      type: "number",
      name: "purchaseDay",
      min: "0",
      value: "0",
    });
    this.readout = el("div", { class: "forecast-readout", text: "Enter the observed tank water." });

    const form = el(
      "form",
      { class: "card forecast-form" },
      el("label", { text: "Start date " }, this.startInput),
      el("label", { text: "Observed water [L] " }, this.waterInput),
      el("label", { text: "Horizon [days] " }, this.horizonInput),
      el(
        "fieldset",
        {},
        el("legend", { text: "Drought strategies" }),
        el("label", { class: "toggle" }, this.overrideToggle, "Reduce demand to "),
        el("label", {}, this.overrideInput, " L/day"),
        el("br", {}),
        el("label", { class: "toggle" }, this.purchaseToggle, "Purchase "),
        el("label", {}, this.purchaseVolumeInput, " L on day "),
        el("label", {}, this.purchaseDayInput),
      ),
      el("button", { type: "submit", text: "Estimate" }),
    );
    form.addEventListener("submit", (event) => {
      event.preventDefault();
      void this.submit();
    });
    for (const input of [this.overrideToggle, this.purchaseToggle]) {
      input.addEventListener("change", () => void this.submit());
    }

    this.el = el("section", { class: "view view-forecast" }, form, this.readout);
  }

  setObservedWater(liters: number): void {
    this.waterInput.value = String(liters);
  }

  strategies(): StrategyIn[] {
    const chosen: StrategyIn[] = [];
    if (this.overrideToggle.checked) {
      chosen.push({
        kind: "demandOverride",
        litersPerDay: Number(this.overrideInput.value),
      });
    }
    if (this.purchaseToggle.checked) {
      chosen.push({
        kind: "purchase",
        volumeL: Number(this.purchaseVolumeInput.value),
        onDay: Number(this.purchaseDayInput.value),
      });
    }
    return chosen;
  }

  async submit(): Promise<void> {
    if (this.waterInput.value === "") return;
    this.requestCount.value += 1;
    await this.latest.run(
      () =>
        this.api.postForecast({
          start: this.startInput.value,
          observedWaterL: Number(this.waterInput.value),
          horizonDays: Number(this.horizonInput.value),
          strategies: this.strategies(),
        }),
      (report) => this.render(report),
      (error) => this.renderError(error),
    );
  }

  async refresh(): Promise<void> {
    // the form drives this view; nothing to load up front
  }

  private renderError(error: unknown): void {
    clear(this.readout);
    this.readout.append(
      el("div", {
        class: "inline-error",
        text: error instanceof Error ? error.message : String(error),
      }),
    );
    this.onError(error);
  }

  private render(report: ForecastOut): void {
    clear(this.readout);
    if (report.probability === null) {
      this.readout.append(
        el("div", {
          class: "forecast-no-demand",
          "data-field": "no-demand",
          text: "No demand in the window: nothing to meet, so no probability.",
        }),
      );
      return;
    }
    const label = el("span", {
      class: "forecast-label",
      "data-field": "label",
      text: labelText(report.label),
    });
    label.style.color = labelColor(report.label);
    this.readout.append(
      el(
        "div",
        { class: "card" },
        el("div", {
          class: "forecast-percent",
          "data-field": "percent",
          text: formatPercent(report.percent),
        }),
        label,
        el("div", {
          class: "forecast-counts",
          "data-field": "counts",
          text: formatCounts(report.successDays, report.demandDays),
        }),
        el("div", {
          class: "forecast-min-water",
          "data-field": "min-end-water",
          text: `Worst-case water afterwards: ${formatLiters(report.minEndWaterL)}`,
        }),
        el("div", {
          class: "forecast-years",
          "data-field": "years",
          text: `Replayed years: ${report.yearsUsed.join(", ")}`,
        }),
      ),
    );
    if (report.purchaseOverflowL > 0) {
      this.readout.append(
        el("div", {
          class: "forecast-overflow",
          "data-field": "purchase-overflow",
          text: `Purchase overflow (tank full): ${formatLiters(report.purchaseOverflowL)}`,
        }),
      );
    }
  }
}
