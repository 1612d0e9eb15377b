"""HTTP API over the extraction and visualization pipelines.

Endpoints (all JSON):
  GET  /health
  POST /api/extract     {"text": ..., "keyword"?: ...} -> JSON-LD event document
  GET  /api/visualize?keyword=&date=                   -> dual scatter views
  GET  /api/events?keyword=&date=                      -> stored events, newest first

Errors use the body schema {"code": ..., "message": ...}.
"""

from __future__ import annotations

import threading
from datetime import date, datetime, timezone
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .classify import (
    PrototypeSet,
    TypedMention,
    classify,
    classify_mentions,
    fit_prototypes,
    load_seed_examples,
)
from .config import ServiceConfig
from .embed import embed, embed_batch
from .errors import (
    DegenerateInput,
    EmptyTitle,
    EventmonError,
    FixtureNotFound,
    FormatError,
    NetworkError,
    RemoteUnavailable,
)
from .graph import build_event_graph, load_type_qids, to_jsonld_dict
from .ingest import ArticleQuery, dedupe_mentions, fetch_articles, filter_english, normalize_title
from .linking import attach_qids, link_entities, load_gazetteer, load_wikimap, resolve_remote
from .store import EventStore, StoredEvent
from .viz import VizPoint, build_views


class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message


class Pipeline:
    """Immutable assets plus the two pipeline entry points the API exposes."""

    def __init__(self, config: ServiceConfig):
        self.config = config
        self.gazetteer = load_gazetteer(config.gazetteer_path)
        self.wikimap = load_wikimap(config.wikimap_path)
        self.type_qids = load_type_qids(config.type_qids_path)
        self.store = EventStore(config.data_dir, config.graph)
        self._prototypes: PrototypeSet | None = None
        self._proto_lock = threading.Lock()

    @property
    def prototypes(self) -> PrototypeSet:
        # fitted on first use so a dead remote embedder surfaces as a 502,
        # not a crash at startup
        if self._prototypes is None:
            with self._proto_lock:
                if self._prototypes is None:
                    seeds = load_seed_examples(self.config.seed_headlines_path)
                    self._prototypes = fit_prototypes(
                        seeds, self.config.embedder, self.config.oos_threshold
                    )
        return self._prototypes

    def extract(self, text: str, keyword: str = "") -> dict:
        """normalize -> embed -> classify -> link -> graph -> persist."""
        mention_text = normalize_title(text)
        vector = embed(mention_text, self.config.embedder)
        event_type, confidence = classify(vector, self.prototypes)
        mention = TypedMention(mention_text, vector, event_type, confidence)

        if self.config.linker_endpoint:
            entities = resolve_remote(
                mention_text,
                self.config.linker_endpoint,
                gazetteer=self.gazetteer,
                score_floor=self.config.linker_score_floor,
            )
        else:
            entities = link_entities(mention_text, self.gazetteer)
        entities = attach_qids(entities, self.wikimap, on_missing="skip")

        now = datetime.now(timezone.utc)
        graph = build_event_graph(
            mention, entities, self.config.publisher, now, self.type_qids, self.config.graph
        )
        self.store.store_event(
            StoredEvent(graph=graph, keyword=keyword, query_date=now.date(), created_at=now)
        )
        return to_jsonld_dict(graph, self.config.graph)

    def visualize(self, keyword: str, query_date: date) -> dict:
        """ingest -> filter -> normalize -> dedupe -> embed -> classify -> views."""
        query = ArticleQuery(
            keyword=keyword,
            date=query_date,
            max_records=self.config.max_records,
            source=self.config.source,
            fixture_path=self.config.fixture_path,
        )
        articles = fetch_articles(
            query, base_url=self.config.gdelt_base_url, timeout=self.config.fetch_timeout
        )
        english = filter_english(articles)
        mentions = []
        for article in english:
            try:
                mentions.append(normalize_title(article.title))
            except EmptyTitle:
                continue  # nothing usable in the title
        unique = dedupe_mentions(mentions)
        counts = {"fetched": len(articles), "english": len(english), "unique": len(unique)}

        if len(unique) < 2:
            return _insufficient(counts)
        vectors = embed_batch(unique, self.config.embedder)
        typed = classify_mentions(unique, vectors, self.prototypes)
        try:
            class_view, cluster_view = build_views(typed, self.config.dbscan)
        except DegenerateInput:
            return _insufficient(counts)
        return {
            "points_classification": [_point_dict(p) for p in class_view],
            "points_clustering": [_point_dict(p) for p in cluster_view],
            "counts": counts,
        }


def _insufficient(counts: dict) -> dict:
    return {
        "points_classification": [],
        "points_clustering": [],
        "counts": counts,
        "reason": "insufficient_data",
    }


def _point_dict(p: VizPoint) -> dict:
    return {
        "x": p.x,
        "y": p.y,
        "title": p.title.text,
        "event_type": p.event_type,
        "cluster_id": p.cluster_id,
    }


def _error_response(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(status_code=status, content={"code": code, "message": message})


def create_app(config: ServiceConfig | None = None) -> FastAPI:
    config = config or ServiceConfig()
    pipeline = Pipeline(config)
    app = FastAPI(title="eventmon", docs_url=None, redoc_url=None)
    app.state.pipeline = pipeline

    @app.exception_handler(ApiError)
    async def on_api_error(request: Request, exc: ApiError):
        return _error_response(exc.status, exc.code, exc.message)

    @app.exception_handler(RequestValidationError)
    async def on_validation_error(request: Request, exc: RequestValidationError):
        return _error_response(400, "bad_request", str(exc))

    @app.exception_handler(EventmonError)
    async def on_pipeline_error(request: Request, exc: EventmonError):
        return _error_response(500, "internal_error", str(exc))

    @app.get("/health")
    def health():
        return {"status": "ok"}

    @app.post("/api/extract")
    async def extract(request: Request):
        try:
            body = await request.json()
        except Exception:
            raise ApiError(400, "bad_request", "body must be a JSON object")
        if not isinstance(body, dict) or not isinstance(body.get("text"), str):
            raise ApiError(400, "bad_request", 'body must be {"text": "<headline>"}')
        keyword = body.get("keyword", "")
        if not isinstance(keyword, str):
            raise ApiError(400, "bad_request", '"keyword" must be a string')
        try:
            return pipeline.extract(body["text"], keyword)
        except EmptyTitle:
            raise ApiError(400, "bad_request", "text is empty after normalization")
        except RemoteUnavailable as exc:
            raise ApiError(502, "remote_unavailable", str(exc))

    @app.get("/api/visualize")
    def visualize(keyword: str = "", date: str = ""):
        if not keyword.strip():
            raise ApiError(400, "bad_request", "keyword must be non-empty")
        try:
            query_date = _parse_date(date)
        except ValueError:
            raise ApiError(400, "bad_request", f"date must be YYYY-MM-DD, got {date!r}")
        try:
            return pipeline.visualize(keyword, query_date)
        except (NetworkError, FixtureNotFound, FormatError) as exc:
            raise ApiError(502, "upstream_fetch_failed", str(exc))
        except RemoteUnavailable as exc:
            raise ApiError(502, "remote_unavailable", str(exc))

    @app.get("/api/events")
    def events(keyword: str | None = None, date: str | None = None):
        query_date = None
        if date is not None:
            try:
                query_date = _parse_date(date)
            except ValueError:
                raise ApiError(400, "bad_request", f"date must be YYYY-MM-DD, got {date!r}")
        try:
            stored = pipeline.store.list_events(keyword, query_date)
        except OSError as exc:
            raise ApiError(500, "store_error", str(exc))
        return {
            "events": [
                {
                    "id": ev.graph.id,
                    "keyword": ev.keyword,
                    "date": ev.query_date.isoformat(),
                    "created_at": ev.created_at.isoformat(),
                    "graph": to_jsonld_dict(ev.graph, config.graph),
                }
                for ev in stored
            ]
        }

    static_dir = Path(__file__).parent.parent.parent / "frontend" / "dist"
    if static_dir.is_dir():
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")
    return app


def _parse_date(value: str) -> date:
    if not value.strip():
        raise ValueError("empty date")
    return date.fromisoformat(value.strip())
