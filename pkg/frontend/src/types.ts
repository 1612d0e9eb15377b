/** Wire types for the monitoring service API. */

export interface ApiPoint {
  x: number;
  y: number;
  title: string;
  event_type: string;
  cluster_id: number;
}

export interface Counts {
  fetched: number;
  english: number;
  unique: number;
}

export interface VisualizeResponse {
  points_classification: ApiPoint[];
  points_clustering: ApiPoint[];
  counts: Counts;
  reason?: string;
}

export interface StoredEventRow {
  id: string;
  keyword: string;
  date: string;
  created_at: string;
  graph: Record<string, unknown>;
}

export interface ErrorBody {
  code: string;
  message: string;
}

// classification labels in the service's canonical order
export const EVENT_TYPE_LABELS = [
  "tropical_storm",
  "flood",
  "shooting",
  "covid",
  "earthquake",
  "hostage",
  "fire",
  "wildfire",
  "explosion",
  "oos",
] as const;

export const COMMENT_KEY = "http://www.w3.org/2000/01/rdf-schema#comment";
