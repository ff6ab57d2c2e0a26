// App shell: tab navigation, the unreachable-service banner, and the
// record -> forecast wiring. Kept separate from main.ts so tests can
// mount the whole app into jsdom.

import { ApiClient, UnreachableError } from "./api.js";
import { clear, el } from "./dom.js";
import { ForecastView } from "./views/forecast.js";
import { RecordsView } from "./views/records.js";
import { ReliabilityView } from "./views/reliability.js";
import { SweepView } from "./views/sweep.js";

export interface View {
  readonly el: HTMLElement;
  refresh(): Promise<void>;
}

export class App {
  readonly el: HTMLElement;
  readonly banner: HTMLElement;
  readonly reliability: ReliabilityView;
  readonly forecast: ForecastView;
  readonly sweep: SweepView;
  readonly records: RecordsView;
  private readonly viewHost: HTMLElement;
  private readonly tabs = new Map<string, { button: HTMLButtonElement; view: View }>();

  constructor(api: ApiClient = new ApiClient()) {
    this.banner = el("div", { class: "banner hidden", role: "alert" });
    this.viewHost = el("main", { class: "view-host" });

    const onError = (error: unknown) => this.showError(error);
    this.reliability = new ReliabilityView(api, onError);
    this.forecast = new ForecastView(api, onError);
    this.sweep = new SweepView(api, onError);
    this.records = new RecordsView(api, onError, (liters) => {
      this.forecast.setObservedWater(liters);
      void this.show("forecast");
    });

    const nav = el("nav", { class: "tabs" });
    const entries: Array<[string, string, View]> = [
      ["reliability", "System & Reliability", this.reliability],
      ["forecast", "Forecast", this.forecast],
      ["sweep", "Tank sizing", this.sweep],
      ["records", "Records", this.records],
    ];
    for (const [id, title, view] of entries) {
      const button = el("button", { type: "button", "data-tab": id, text: title });
      button.addEventListener("click", () => void this.show(id));
      nav.append(button);
      this.tabs.set(id, { button, view });
    }

    this.el = el(
      "div",
      { class: "app" },
      el("header", {}, el("h1", { text: "raintank" }), nav),
      this.banner,
      this.viewHost,
    );
  }

  async show(id: string): Promise<void> {
    const tab = this.tabs.get(id);
    if (!tab) throw new Error(`unknown tab ${id}`);
    for (const [otherId, other] of this.tabs) {
      other.button.classList.toggle("active", otherId === id);
    }
    clear(this.viewHost);
    this.viewHost.append(tab.view.el);
    this.hideBanner();
    await tab.view.refresh();
  }

  showError(error: unknown): void {
    if (error instanceof UnreachableError) {
      // no stale data: blank the current view behind the banner
      clear(this.viewHost);
      this.banner.textContent =
        "Cannot reach the raintank service. Start it with `raintank serve` and reload.";
    } else {
      this.banner.textContent = error instanceof Error ? error.message : String(error);
    }
    this.banner.classList.remove("hidden");
  }

  hideBanner(): void {
    this.banner.classList.add("hidden");
    this.banner.textContent = "";
  }
}
