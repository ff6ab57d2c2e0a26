// Wire types for the raintank service JSON API. The UI displays these
// fields verbatim; it never computes simulation results itself.

export type Label = "Unlikely" | "Occasionally" | "Fair" | "Good" | "VeryGood";

export interface SpecOut {
  catchmentAreaM2: number;
  runoffCoeff: number;
  tankVolumeL: number;
}

export interface DemandOut {
  constantLPerDay: number | null;
  dated: Record<string, number> | null;
}

export interface SystemOut {
  name: string;
  spec: SpecOut;
  demand: DemandOut;
}

export interface ReliabilityOut {
  probability: number | null;
  percent: number | null;
  label: Label | null;
  successDays: number;
  demandDays: number;
  windowStart: string;
  windowEnd: string;
  tankVolumeL: number;
  warnings: string[];
}

export interface VariantsOut {
  fraction: number;
  smaller: ReliabilityOut;
  current: ReliabilityOut;
  larger: ReliabilityOut;
}

export interface DemandOverrideIn {
  kind: "demandOverride";
  litersPerDay: number;
}

export interface PurchaseIn {
  kind: "purchase";
  volumeL: number;
  onDay: number;
}

export type StrategyIn = DemandOverrideIn | PurchaseIn;

export interface ForecastIn {
  start: string;
  observedWaterL: number;
  horizonDays: number;
  strategies: StrategyIn[];
}

export interface ForecastOut {
  probability: number | null;
  percent: number | null;
  label: Label | null;
  successDays: number;
  demandDays: number;
  minEndWaterL: number;
  perYearEndWaterL: Record<string, number>;
  yearsUsed: number[];
  purchaseOverflowL: number;
  warnings: string[];
}

export interface CurvePointOut {
  value: number;
  probability: number;
  label: Label;
}

export interface OptimalOut {
  tankVolumeL: number;
  probability: number;
}

export interface SweepOut {
  parameter: "tank" | "runoff";
  points: CurvePointOut[];
  optimal: OptimalOut | null;
}

export interface RecordOut {
  date: string;
  measuredWaterL: number;
  potable: boolean;
  note: string | null;
}

export interface RecordsOut {
  records: RecordOut[];
}

export interface HealthOut {
  status: string;
  dataLoaded: boolean;
}

export interface ErrorBody {
  kind: string;
  message: string;
}
