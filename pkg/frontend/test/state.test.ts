import { describe, expect, it } from "vitest";

import { findStoredGraph } from "../src/api.js";
import { clearSelection, makeViewState, RequestGate, selectPoint } from "../src/state.js";
import { ApiPoint, COMMENT_KEY, StoredEventRow, VisualizeResponse } from "../src/types.js";

function point(title: string): ApiPoint {
  return { x: 0, y: 0, title, event_type: "flood", cluster_id: 0 };
}

function response(n: number): VisualizeResponse {
  const pts = Array.from({ length: n }, (_, i) => point(`headline ${i}`));
  return {
    points_classification: pts,
    points_clustering: pts.map((p) => ({ ...p })),
    counts: { fetched: n, english: n, unique: n },
  };
}

describe("view state", () => {
  it("keeps both views and starts unselected", () => {
    const state = makeViewState("hamburg", "2023-03-10", response(3));
    expect(state.classification.length).toBe(3);
    expect(state.clustering.length).toBe(3);
    expect(state.selected).toBeNull();
  });

  it("rejects unequal view lengths", () => {
    const bad = response(3);
    bad.points_clustering = bad.points_clustering.slice(0, 2);
    expect(() => makeViewState("hamburg", "2023-03-10", bad)).toThrow(/equal length/);
  });

  it("selection must be in range", () => {
    const state = makeViewState("hamburg", "2023-03-10", response(2));
    expect(selectPoint(state, 1).selected).toBe(1);
    expect(() => selectPoint(state, 2)).toThrow(/out of range/);
    expect(() => selectPoint(state, -1)).toThrow(/out of range/);
  });

  it("re-query clears the selection", () => {
    let state = makeViewState("hamburg", "2023-03-10", response(2));
    state = selectPoint(state, 0);
    const next = makeViewState("hamburg", "2023-03-11", response(2));
    expect(next.selected).toBeNull();
    expect(clearSelection(state).selected).toBeNull();
  });
});

describe("request gate", () => {
  it("only the newest ticket is current", () => {
    const gate = new RequestGate();
    const first = gate.begin();
    const second = gate.begin();
    expect(gate.isCurrent(first)).toBe(false); // stale response is dropped
    expect(gate.isCurrent(second)).toBe(true);
    const third = gate.begin();
    expect(gate.isCurrent(second)).toBe(false);
    expect(gate.isCurrent(third)).toBe(true);
  });
});

describe("findStoredGraph", () => {
  function row(comment: string): StoredEventRow {
    return {
      id: `urn:${comment}`,
      keyword: "",
      date: "2023-03-10",
      created_at: "2023-03-10T00:00:00+00:00",
      graph: { [COMMENT_KEY]: [{ "@value": comment }] },
    };
  }

  it("matches the stored comment to the plotted title", () => {
    const rows = [row("first headline"), row("second headline")];
    const graph = findStoredGraph(rows, "second headline");
    expect(graph).not.toBeNull();
    expect((graph![COMMENT_KEY] as Array<{ "@value": string }>)[0]["@value"])
      .toBe("second headline");
  });

  it("returns null when nothing was extracted", () => {
    expect(findStoredGraph([row("other")], "missing headline")).toBeNull();
  });
});
