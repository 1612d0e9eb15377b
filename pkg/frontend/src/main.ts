/** Page wiring: form, two canvases, legend, detail panel. */

import { ApiError } from "./api.js";
import { inspectPoint, PLOT_HEIGHT, PLOT_WIDTH, QueryResult, queryScenes } from "./app.js";
import { hitTest } from "./scene.js";
import { RequestGate, selectPoint, ViewState } from "./state.js";
import { drawScene, renderDetail, renderLegend, renderStatus } from "./render.js";

const form = document.getElementById("query-form") as HTMLFormElement;
const keywordInput = document.getElementById("keyword") as HTMLInputElement;
const dateInput = document.getElementById("date") as HTMLInputElement;
const submitButton = document.getElementById("submit") as HTMLButtonElement;
const leftCanvas = document.getElementById("plot-classification") as HTMLCanvasElement;
const rightCanvas = document.getElementById("plot-clustering") as HTMLCanvasElement;
const legendList = document.getElementById("legend") as HTMLElement;
const detailPanel = document.getElementById("detail") as HTMLElement;
const statusLine = document.getElementById("status") as HTMLElement;

const gate = new RequestGate();
let current: QueryResult | null = null;
let state: ViewState | null = null;

for (const canvas of [leftCanvas, rightCanvas]) {
  canvas.width = PLOT_WIDTH;
  canvas.height = PLOT_HEIGHT;
}

function redraw(): void {
  if (!current || !state) {
    return;
  }
  drawScene(leftCanvas, current.classificationScene, state.selected);
  drawScene(rightCanvas, current.clusteringScene, state.selected);
}

async function runQuery(): Promise<void> {
  const keyword = keywordInput.value.trim();
  if (!keyword) {
    renderStatus(statusLine, "enter a keyword first", true);
    return;
  }
  const ticket = gate.begin();
  submitButton.disabled = true;
  renderStatus(statusLine, "loading...");
  try {
    const result = await queryScenes("", keyword, dateInput.value);
    if (!gate.isCurrent(ticket)) {
      return; // a newer query superseded this one
    }
    current = result;
    state = result.state; // selection starts cleared on every query
    renderLegend(legendList, result.legend);
    renderDetail(detailPanel, null);
    const c = result.state.counts;
    if (result.empty !== null) {
      drawScene(leftCanvas, [], null);
      drawScene(rightCanvas, [], null);
      renderStatus(statusLine, result.empty);
    } else {
      redraw();
      renderStatus(
        statusLine,
        `fetched ${c.fetched} · english ${c.english} · unique ${c.unique}`,
      );
    }
  } catch (err) {
    if (!gate.isCurrent(ticket)) {
      return;
    }
    if (err instanceof ApiError) {
      renderStatus(statusLine, `${err.code}: ${err.message}`, true);
    } else {
      renderStatus(statusLine, String(err), true);
    }
  } finally {
    if (gate.isCurrent(ticket)) {
      submitButton.disabled = false;
    }
  }
}

async function onCanvasClick(canvas: HTMLCanvasElement, event: MouseEvent): Promise<void> {
  if (!current || !state || current.empty !== null) {
    return;
  }
  const scene = canvas === leftCanvas ? current.classificationScene : current.clusteringScene;
  const rect = canvas.getBoundingClientRect();
  const hit = hitTest(scene, event.clientX - rect.left, event.clientY - rect.top);
  if (hit === null) {
    return; // empty canvas: selection unchanged
  }
  state = selectPoint(state, hit);
  redraw(); // same index highlights in both plots
  try {
    renderDetail(detailPanel, await inspectPoint("", state, hit));
  } catch (err) {
    renderStatus(statusLine, String(err), true);
  }
}

form.addEventListener("submit", (event) => {
  event.preventDefault();
  void runQuery();
});
leftCanvas.addEventListener("click", (event) => void onCanvasClick(leftCanvas, event));
rightCanvas.addEventListener("click", (event) => void onCanvasClick(rightCanvas, event));

renderDetail(detailPanel, null);
renderStatus(statusLine, "query a keyword and day to load the plots");
