/** Canvas and DOM painters; kept thin so the scene models stay testable. */

import { LegendEntry, NOISE_GREY } from "./palette.js";
import { POINT_RADIUS, ScenePoint } from "./scene.js";
import { PointDetail } from "./app.js";

export function drawScene(
  canvas: HTMLCanvasElement,
  scene: ScenePoint[],
  selected: number | null,
): void {
  const ctx = canvas.getContext("2d");
  if (!ctx) {
    return;
  }
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  scene.forEach((p, i) => {
    ctx.beginPath();
    ctx.arc(p.px, p.py, POINT_RADIUS, 0, Math.PI * 2);
    ctx.fillStyle = p.color;
    ctx.fill();
    if (i === selected) {
      ctx.beginPath();
      ctx.arc(p.px, p.py, POINT_RADIUS + 3, 0, Math.PI * 2);
      ctx.strokeStyle = "#111";
      ctx.lineWidth = 2;
      ctx.stroke();
    }
  });
}

export function renderLegend(list: HTMLElement, entries: LegendEntry[]): void {
  list.innerHTML = "";
  for (const entry of entries) {
    const item = document.createElement("li");
    const chip = document.createElement("span");
    chip.className = "chip";
    chip.style.backgroundColor = entry.color;
    item.appendChild(chip);
    item.appendChild(document.createTextNode(entry.label));
    list.appendChild(item);
  }
  const noise = document.createElement("li");
  const chip = document.createElement("span");
  chip.className = "chip";
  chip.style.backgroundColor = NOISE_GREY;
  noise.appendChild(chip);
  noise.appendChild(document.createTextNode("noise (clustering)"));
  list.appendChild(noise);
}

export function renderDetail(panel: HTMLElement, detail: PointDetail | null): void {
  panel.innerHTML = "";
  if (!detail) {
    panel.textContent = "click a point to inspect it";
    return;
  }
  const title = document.createElement("p");
  title.className = "detail-title";
  title.textContent = detail.title;
  panel.appendChild(title);

  const meta = document.createElement("p");
  meta.textContent = `type: ${detail.eventType} · cluster: ${
    detail.clusterId === -1 ? "noise" : detail.clusterId
  }`;
  panel.appendChild(meta);

  if (detail.graph) {
    const pre = document.createElement("pre");
    pre.textContent = JSON.stringify(detail.graph, null, 2);
    panel.appendChild(pre);
  } else {
    const note = document.createElement("p");
    note.className = "muted";
    note.textContent = "not yet extracted";
    panel.appendChild(note);
  }
}

export function renderStatus(el: HTMLElement, text: string, isError = false): void {
  el.textContent = text;
  el.className = isError ? "status error" : "status";
}
