/** DOM-free controller: everything main.ts renders is assembled here. */

import { fetchEvents, fetchVisualize, findStoredGraph } from "./api.js";
import { LegendEntry, typeLegend } from "./palette.js";
import { buildScene, ScenePoint, sharedBounds } from "./scene.js";
import { makeViewState, ViewState } from "./state.js";

export const PLOT_WIDTH = 520;
export const PLOT_HEIGHT = 420;

export interface QueryResult {
  state: ViewState;
  classificationScene: ScenePoint[];
  clusteringScene: ScenePoint[];
  legend: LegendEntry[];
  empty: string | null; // set when there is nothing to plot
}

/** Fetch one query and lay out both plots over shared axes. */
export async function queryScenes(
  base: string,
  keyword: string,
  date: string,
): Promise<QueryResult> {
  if (!keyword.trim()) {
    throw new Error("keyword must be non-empty");
  }
  const resp = await fetchVisualize(base, keyword, date);
  const state = makeViewState(keyword, date, resp);
  if (resp.reason === "insufficient_data" || state.classification.length === 0) {
    return {
      state,
      classificationScene: [],
      clusteringScene: [],
      legend: typeLegend(),
      empty: `not enough distinct articles to plot (fetched ${resp.counts.fetched})`,
    };
  }
  const bounds = sharedBounds(state.classification);
  return {
    state,
    classificationScene: buildScene(
      state.classification, bounds, PLOT_WIDTH, PLOT_HEIGHT, "type",
    ),
    clusteringScene: buildScene(state.clustering, bounds, PLOT_WIDTH, PLOT_HEIGHT, "cluster"),
    legend: typeLegend(),
    empty: null,
  };
}

export interface PointDetail {
  title: string;
  eventType: string;
  clusterId: number;
  graph: Record<string, unknown> | null; // stored JSON-LD when extracted before
}

/** Detail panel content for one selected point. */
export async function inspectPoint(base: string, state: ViewState, index: number):
    Promise<PointDetail> {
  if (index < 0 || index >= state.classification.length) {
    throw new Error(`selection index ${index} out of range`);
  }
  const point = state.classification[index];
  const stored = await fetchEvents(base);
  return {
    title: point.title,
    eventType: point.event_type,
    clusterId: state.clustering[index].cluster_id,
    graph: findStoredGraph(stored, point.title),
  };
}
