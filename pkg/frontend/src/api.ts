/** Fetch wrappers over the service endpoints. */

import { COMMENT_KEY, ErrorBody, StoredEventRow, VisualizeResponse } from "./types.js";

export class ApiError extends Error {
  code: string;
  status: number;

  constructor(status: number, body: ErrorBody) {
    super(body.message);
    this.status = status;
    this.code = body.code;
  }
}

async function getJson(url: string): Promise<unknown> {
  const resp = await fetch(url);
  const body = await resp.json();
  if (!resp.ok) {
    throw new ApiError(resp.status, body as ErrorBody);
  }
  return body;
}

export async function fetchVisualize(
  base: string,
  keyword: string,
  date: string,
): Promise<VisualizeResponse> {
  const params = new URLSearchParams({ keyword, date });
  return (await getJson(`${base}/api/visualize?${params}`)) as VisualizeResponse;
}

export async function fetchEvents(base: string, keyword?: string): Promise<StoredEventRow[]> {
  const params = new URLSearchParams();
  if (keyword) {
    params.set("keyword", keyword);
  }
  const query = params.size > 0 ? `?${params}` : "";
  const body = (await getJson(`${base}/api/events${query}`)) as { events: StoredEventRow[] };
  return body.events;
}

export async function postExtract(
  base: string,
  text: string,
  keyword = "",
): Promise<Record<string, unknown>> {
  const resp = await fetch(`${base}/api/extract`, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify({ text, keyword }),
  });
  const body = await resp.json();
  if (!resp.ok) {
    throw new ApiError(resp.status, body as ErrorBody);
  }
  return body as Record<string, unknown>;
}

/** Stored JSON-LD whose comment equals the plotted title, newest first wins. */
export function findStoredGraph(
  rows: StoredEventRow[],
  title: string,
): Record<string, unknown> | null {
  for (const row of rows) {
    const comments = row.graph[COMMENT_KEY] as Array<{ "@value": string }> | undefined;
    if (comments && comments.some((c) => c["@value"] === title)) {
      return row.graph;
    }
  }
  return null;
}
