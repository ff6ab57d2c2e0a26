// Recorded service responses for the toy scenario (k=0.5, A=10 m2,
// V=100 L, 30 L/day). Copied verbatim from the service's golden contract
// fixtures; the UI must display these numbers untouched.

import type {
  ForecastOut,
  RecordsOut,
  ReliabilityOut,
  SweepOut,
  SystemOut,
  VariantsOut,
} from "../src/types.js";

export const SYSTEM_FIXTURE: SystemOut = {
  name: "toy",
  spec: { catchmentAreaM2: 10.0, runoffCoeff: 0.5, tankVolumeL: 100.0 },
  demand: { constantLPerDay: 30.0, dated: null },
};

export const RELIABILITY_FIXTURE: ReliabilityOut = {
  probability: 0.6667,
  percent: 67,
  label: "Fair",
  successDays: 2,
  demandDays: 3,
  windowStart: "2022-01-01",
  windowEnd: "2022-01-03",
  tankVolumeL: 100.0,
  warnings: ["short-history"],
};

export const VARIANTS_FIXTURE: VariantsOut = {
  fraction: 0.25,
  smaller: { ...RELIABILITY_FIXTURE, tankVolumeL: 75.0 },
  current: { ...RELIABILITY_FIXTURE, tankVolumeL: 100.0 },
  larger: { ...RELIABILITY_FIXTURE, tankVolumeL: 125.0 },
};

export const FORECAST_FIXTURE: ForecastOut = {
  probability: 0.6667,
  percent: 67,
  label: "Fair",
  successDays: 4,
  demandDays: 6,
  minEndWaterL: 0.0,
  perYearEndWaterL: { "2021": 70.0, "2022": 0.0 },
  yearsUsed: [2021, 2022],
  purchaseOverflowL: 0.0,
  warnings: [],
};

// the same toy after toggling a 1000 L purchase on day 0: the tank caps
// at 100 L, so every replay year succeeds throughout
export const FORECAST_WITH_PURCHASE_FIXTURE: ForecastOut = {
  probability: 1.0,
  percent: 100,
  label: "VeryGood",
  successDays: 6,
  demandDays: 6,
  minEndWaterL: 10.0,
  perYearEndWaterL: { "2021": 70.0, "2022": 10.0 },
  yearsUsed: [2021, 2022],
  purchaseOverflowL: 940.0,
  warnings: [],
};

export const FORECAST_NO_DEMAND_FIXTURE: ForecastOut = {
  probability: null,
  percent: null,
  label: null,
  successDays: 0,
  demandDays: 0,
  minEndWaterL: 40.0,
  perYearEndWaterL: { "2021": 100.0, "2022": 40.0 },
  yearsUsed: [2021, 2022],
  purchaseOverflowL: 0.0,
  warnings: ["no-demand"],
};

export const SWEEP_FIXTURE: SweepOut = {
  parameter: "tank",
  points: [
    { value: 10.0, probability: 0.0, label: "Unlikely" },
    { value: 50.0, probability: 0.6667, label: "Fair" },
    { value: 100.0, probability: 0.6667, label: "Fair" },
  ],
  optimal: { tankVolumeL: 50.0, probability: 0.6667 },
};

export const RECORDS_FIXTURE: RecordsOut = {
  records: [
    { date: "2023-06-01", measuredWaterL: 40.0, potable: true, note: "after first rains" },
    { date: "2023-07-01", measuredWaterL: 20.0, potable: false, note: null },
  ],
};
