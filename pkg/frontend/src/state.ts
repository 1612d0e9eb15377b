/** View state and the latest-wins request gate. */

import { ApiPoint, Counts, VisualizeResponse } from "./types.js";

export interface ViewState {
  keyword: string;
  date: string;
  classification: ApiPoint[];
  clustering: ApiPoint[];
  counts: Counts;
  selected: number | null;
}

export function makeViewState(keyword: string, date: string, resp: VisualizeResponse): ViewState {
  if (resp.points_classification.length !== resp.points_clustering.length) {
    throw new Error("view arrays must have equal length");
  }
  return {
    keyword,
    date,
    classification: resp.points_classification,
    clustering: resp.points_clustering,
    counts: resp.counts,
    selected: null,
  };
}

export function selectPoint(state: ViewState, index: number): ViewState {
  if (index < 0 || index >= state.classification.length) {
    throw new Error(`selection index ${index} out of range`);
  }
  return { ...state, selected: index };
}

export function clearSelection(state: ViewState): ViewState {
  return { ...state, selected: null };
}

/**
 * Serializes visualize requests: begin() marks a new request as the current
 * one, and responses are applied only while their ticket is still current.
 */
export class RequestGate {
  private seq = 0;

  begin(): number {
    this.seq += 1;
    return this.seq;
  }

  isCurrent(ticket: number): boolean {
    return ticket === this.seq;
  }
}
