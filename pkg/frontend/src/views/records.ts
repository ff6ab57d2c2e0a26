// Records view: the monthly observation log, plus the bridge into the
// forecast ("use as starting water").

import { ApiError, type ApiClient } from "../api.js";
import { clear, el } from "../dom.js";
import { formatLiters } from "../format.js";
import { LatestWins } from "../latest.js";
import type { RecordOut, RecordsOut } from "../types.js";

export class RecordsView {
  readonly el: HTMLElement;
  private readonly latest = new LatestWins();
  private readonly table: HTMLElement;
  private readonly formError: HTMLElement;
  private readonly dateInput: HTMLInputElement;
  private readonly waterInput: HTMLInputElement;
  private readonly potableInput: HTMLInputElement;
  private readonly noteInput: HTMLInputElement;

  constructor(
    private readonly api: ApiClient,
    private readonly onError: (error: unknown) => void,
    private readonly onUseAsForecastWater: (liters: number) => void,
  ) {
    this.table = el("div", { class: "records-table" });
    this.formError = el("div", { class: "inline-error", role: "alert" });
    this.dateInput = el("input", {
      type: "date",
      name: "date",
      value: new Date().toISOString().slice(0, 10),
    });
    this.waterInput = el("input", {
      type: "number",
      name: "measuredWater",
      min: "0",
      step: "any",
      placeholder: "measured water [L]",
    });
    this.potableInput = el("input", { type: "checkbox", name: "potable", checked: "" });
    this.noteInput = el("input", { type: "text", name: "note", placeholder: "note" });

    const form = el(
      "form",
      { class: "card records-form" },
      el("label", { text: "Date " }, this.dateInput),
      el("label", { text: "Measured water [L] " }, this.waterInput),
      el("label", { class: "toggle" }, this.potableInput, "potable"),
      el("label", { text: "Note " }, this.noteInput),
      el("button", { type: "submit", text: "Add record" }),
      this.formError,
    );
    form.addEventListener("submit", (event) => {
      event.preventDefault();
      void this.add();
    });

    this.el = el("section", { class: "view view-records" }, form, this.table);
  }

  async refresh(): Promise<void> {
    await this.latest.run(
      () => this.api.getRecords(),
      (data) => this.render(data),
      this.onError,
    );
  }

  private async add(): Promise<void> {
    this.formError.textContent = "";
    if (this.waterInput.value === "") return;
    const record: RecordOut = {
      date: this.dateInput.value,
      measuredWaterL: Number(this.waterInput.value),
      potable: this.potableInput.checked,
      note: this.noteInput.value || null,
    };
    try {
      await this.api.postRecord(record);
    } catch (error) {
      // validation problems stay inline next to the form
      if (error instanceof ApiError) {
        this.formError.textContent = `${error.kind}: ${error.message}`;
        return;
      }
      this.onError(error);
      return;
    }
    await this.refresh();
  }

  private render(data: RecordsOut): void {
    clear(this.table);
    if (!data.records.length) {
      this.table.append(el("p", { class: "records-empty", text: "No observations yet." }));
      return;
    }
    const rows = el("table", {},
      el("thead", {},
        el("tr", {},
          el("th", { text: "Date" }),
          el("th", { text: "Water" }),
          el("th", { text: "Potable" }),
          el("th", { text: "Note" }),
          el("th", { text: "" }),
        ),
      ),
    );
    const body = el("tbody", {});
    for (const record of data.records) {
      const useButton = el("button", {
        type: "button",
        class: "use-as-w0",
        text: "Use as forecast start",
      });
      useButton.addEventListener("click", () =>
        this.onUseAsForecastWater(record.measuredWaterL),
      );
      body.append(
        el("tr", { "data-date": record.date },
          el("td", { class: "record-date", text: record.date }),
          el("td", { class: "record-water", text: formatLiters(record.measuredWaterL) }),
          el("td", { class: "record-potable", text: record.potable ? "yes" : "no" }),
          el("td", { class: "record-note", text: record.note ?? "" }),
          el("td", {}, useButton),
        ),
      );
    }
    rows.append(body);
    this.table.append(rows);
  }
}
