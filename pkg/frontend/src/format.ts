// Display formatting. Numbers come from the service; the only arithmetic
// here is unit presentation (1 m3 = 1000 L) and percent rendering of the
// service-provided fraction.

import type { Label } from "./types.js";

export const LABEL_COLORS: Record<Label, string> = {
  Unlikely: "#c0392b",
  Occasionally: "#e67e22",
  Fair: "#f1c40f",
  Good: "#27ae60",
  VeryGood: "#1e8449",
};

export function labelColor(label: Label | null): string {
  return label === null ? "#7f8c8d" : LABEL_COLORS[label];
}

export function labelText(label: Label | null): string {
  if (label === null) return "n/a";
  return label === "VeryGood" ? "Very Good" : label;
}

export function formatPercent(percent: number | null): string {
  return percent === null ? "n/a" : `${percent}%`;
}

export function formatProbability(probability: number | null): string {
  return probability === null ? "n/a" : `${(probability * 100).toFixed(1)}%`;
}

export function formatLiters(liters: number): string {
  const rounded = Math.round(liters * 10) / 10;
  const m3 = liters / 1000;
  const m3Text = m3 >= 100 ? m3.toFixed(0) : m3 >= 1 ? m3.toFixed(1) : m3.toFixed(3);
  return `${rounded} L (${m3Text} m³)`;
}

export function formatCounts(successDays: number, demandDays: number): string {
  return `${successDays}/${demandDays} demand days met`;
}
