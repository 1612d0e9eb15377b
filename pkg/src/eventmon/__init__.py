"""Disaster event monitoring pipeline.

News titles come in from a keyword query (live GDELT-style API or offline
fixture), get typed against nine disaster classes, linked to Wikidata, and
emitted as JSON-LD event graphs; a PCA + DBSCAN layer renders each query
batch as dual scatter views for visual event-instance screening.
"""

from .classify import EVENT_TYPES, OOS, PrototypeSet, TypedMention, classify, fit_prototypes
from .config import ServiceConfig, load_config
from .embed import EmbedderConfig, cosine, embed, embed_batch
from .graph import (
    EventGraph,
    GraphConfig,
    TypeQidTable,
    build_event_graph,
    format_timestamp,
    parse_jsonld,
    serialize_jsonld,
)
from .ingest import (
    Article,
    ArticleQuery,
    MentionText,
    dedupe_mentions,
    fetch_articles,
    filter_english,
    normalize_title,
)
from .linking import GazetteerEntry, LinkedEntity, WikiMapping, link_entities, wikipedia_to_wikidata
from .viz import DbscanParams, PCAModel, VizPoint, build_views, dbscan, fit_pca, project

__version__ = "0.1.0"

__all__ = [
    "Article",
    "ArticleQuery",
    "DbscanParams",
    "EVENT_TYPES",
    "EmbedderConfig",
    "EventGraph",
    "GazetteerEntry",
    "GraphConfig",
    "LinkedEntity",
    "MentionText",
    "OOS",
    "PCAModel",
    "PrototypeSet",
    "ServiceConfig",
    "TypeQidTable",
    "TypedMention",
    "VizPoint",
    "WikiMapping",
    "build_event_graph",
    "build_views",
    "classify",
    "cosine",
    "dbscan",
    "dedupe_mentions",
    "embed",
    "embed_batch",
    "fetch_articles",
    "filter_english",
    "fit_pca",
    "fit_prototypes",
    "format_timestamp",
    "link_entities",
    "load_config",
    "normalize_title",
    "parse_jsonld",
    "project",
    "serialize_jsonld",
    "wikipedia_to_wikidata",
]
