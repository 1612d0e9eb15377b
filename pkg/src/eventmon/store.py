"""Append-only event persistence: one JSON-LD file per event plus a line index.

Layout: data_dir/YYYY-MM-DD/<uuid>.jsonld, with data_dir/index.jsonl holding
one JSON line per stored event. Index appends are atomic per record (single
O_APPEND write), and a process-level lock serializes writers.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass
from datetime import date, datetime, timezone
from pathlib import Path

from .graph import EventGraph, GraphConfig, parse_jsonld, serialize_jsonld


@dataclass(frozen=True)
class StoredEvent:
    graph: EventGraph
    keyword: str
    query_date: date
    created_at: datetime


class EventStore:
    def __init__(self, data_dir: str | Path, graph_config: GraphConfig = GraphConfig()):
        self.root = Path(data_dir)
        self.root.mkdir(parents=True, exist_ok=True)
        self.index_path = self.root / "index.jsonl"
        self.graph_config = graph_config
        self._lock = threading.Lock()
        # fail fast if the directory is not actually writable
        probe = self.root / ".write_probe"
        probe.write_text("", encoding="utf-8")
        probe.unlink()

    def _event_path(self, event: StoredEvent) -> Path:
        day = event.query_date.isoformat()
        event_uuid = event.graph.id.rstrip("/").rsplit("/", 1)[-1]
        return self.root / day / f"{event_uuid}.jsonld"

    def store_event(self, event: StoredEvent) -> Path:
        path = self._event_path(event)
        row = json.dumps(
            {
                "id": event.graph.id,
                "keyword": event.keyword,
                "date": event.query_date.isoformat(),
                "created_at": event.created_at.astimezone(timezone.utc).isoformat(),
                "path": str(path.relative_to(self.root)),
            },
            ensure_ascii=False,
        )
        with self._lock:
            path.parent.mkdir(parents=True, exist_ok=True)
            with open(path, "x", encoding="utf-8") as f:
                f.write(serialize_jsonld(event.graph, self.graph_config))
            with open(self.index_path, "a", encoding="utf-8") as f:
                f.write(row + "\n")
        return path

    def list_events(
        self, keyword: str | None = None, query_date: date | None = None
    ) -> list[StoredEvent]:
        """Stored events matching the filter, newest first."""
        if not self.index_path.is_file():
            return []
        rows = []
        for line in self.index_path.read_text(encoding="utf-8").splitlines():
            if line.strip():
                rows.append(json.loads(line))
        if keyword is not None:
            rows = [r for r in rows if r["keyword"] == keyword]
        if query_date is not None:
            rows = [r for r in rows if r["date"] == query_date.isoformat()]
        rows.sort(key=lambda r: r["created_at"], reverse=True)
        events = []
        for row in rows:
            doc = (self.root / row["path"]).read_text(encoding="utf-8")
            events.append(
                StoredEvent(
                    graph=parse_jsonld(doc, self.graph_config),
                    keyword=row["keyword"],
                    query_date=date.fromisoformat(row["date"]),
                    created_at=datetime.fromisoformat(row["created_at"]),
                )
            )
        return events
