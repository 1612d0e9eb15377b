/** Deterministic colors: one per event type, one per cluster id, grey noise. */

import { EVENT_TYPE_LABELS } from "./types.js";

export const NOISE_GREY = "#9e9e9e";

const TYPE_COLORS: Record<string, string> = {
  tropical_storm: "#1f77b4",
  flood: "#17becf",
  shooting: "#d62728",
  covid: "#9467bd",
  earthquake: "#8c564b",
  hostage: "#e377c2",
  fire: "#ff7f0e",
  wildfire: "#bcbd22",
  explosion: "#7f7f7f",
  oos: "#2ca02c",
};

const CLUSTER_COLORS = [
  "#1f77b4",
  "#ff7f0e",
  "#2ca02c",
  "#d62728",
  "#9467bd",
  "#8c564b",
  "#e377c2",
  "#bcbd22",
  "#17becf",
  "#aec7e8",
  "#ffbb78",
  "#98df8a",
];

export function typeColor(label: string): string {
  return TYPE_COLORS[label] ?? NOISE_GREY;
}

export function clusterColor(id: number): string {
  if (id < 0) {
    return NOISE_GREY;
  }
  return CLUSTER_COLORS[id % CLUSTER_COLORS.length];
}

export interface LegendEntry {
  label: string;
  color: string;
}

export function typeLegend(): LegendEntry[] {
  return EVENT_TYPE_LABELS.map((label) => ({ label, color: typeColor(label) }));
}
