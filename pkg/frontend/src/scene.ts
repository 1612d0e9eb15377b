/** Scene models for the two scatter plots: pure data, no canvas calls. */

import { clusterColor, typeColor } from "./palette.js";
import { ApiPoint } from "./types.js";

export interface Bounds {
  xMin: number;
  xMax: number;
  yMin: number;
  yMax: number;
}

export interface ScenePoint {
  px: number; // pixel position, y grows downward
  py: number;
  color: string;
  title: string;
  eventType: string;
  clusterId: number;
}

export const POINT_RADIUS = 5;

/** One bounds box over both plots so their axes stay comparable. */
export function sharedBounds(points: ApiPoint[], pad = 0.08): Bounds {
  if (points.length === 0) {
    return { xMin: -1, xMax: 1, yMin: -1, yMax: 1 };
  }
  let xMin = Infinity;
  let xMax = -Infinity;
  let yMin = Infinity;
  let yMax = -Infinity;
  for (const p of points) {
    xMin = Math.min(xMin, p.x);
    xMax = Math.max(xMax, p.x);
    yMin = Math.min(yMin, p.y);
    yMax = Math.max(yMax, p.y);
  }
  // degenerate ranges still need visible extent
  const xPad = (xMax - xMin || 2) * pad;
  const yPad = (yMax - yMin || 2) * pad;
  return { xMin: xMin - xPad, xMax: xMax + xPad, yMin: yMin - yPad, yMax: yMax + yPad };
}

export function buildScene(
  points: ApiPoint[],
  bounds: Bounds,
  width: number,
  height: number,
  colorBy: "type" | "cluster",
): ScenePoint[] {
  const xSpan = bounds.xMax - bounds.xMin;
  const ySpan = bounds.yMax - bounds.yMin;
  return points.map((p) => ({
    px: ((p.x - bounds.xMin) / xSpan) * width,
    py: height - ((p.y - bounds.yMin) / ySpan) * height,
    color: colorBy === "type" ? typeColor(p.event_type) : clusterColor(p.cluster_id),
    title: p.title,
    eventType: p.event_type,
    clusterId: p.cluster_id,
  }));
}

/** Index of the nearest point within radius of the click, else null. */
export function hitTest(
  scene: ScenePoint[],
  px: number,
  py: number,
  radius = POINT_RADIUS + 3,
): number | null {
  let best: number | null = null;
  let bestDist = radius * radius;
  scene.forEach((p, i) => {
    const d = (p.px - px) ** 2 + (p.py - py) ** 2;
    if (d <= bestDist) {
      best = i;
      bestDist = d;
    }
  });
  return best;
}
