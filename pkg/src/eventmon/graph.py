"""Event graph assembly and JSON-LD serialization.

One extracted mention becomes one event node: typed against Wikidata,
annotated with locality/impact links, publisher, and a timestamp. Output is
expanded-form JSON-LD with full property IRIs and a fixed key order so the
documents are stable enough for golden-file comparison.
"""

from __future__ import annotations

import json
import re
import uuid
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from .classify import EVENT_TYPES, OOS, TypedMention
from .errors import OosHasNoType
from .linking import QID_PATTERN, ROLE_LOCALITY, LinkedEntity

DEFAULT_EVENT_NAMESPACE = "https://data.CoyPu.org/event/mod/"
DEFAULT_ONTOLOGY_NAMESPACE = "https://schema.CoyPu.org/global#"
DEFAULT_WIKIDATA_PREFIX = "http://www.wikidata.org/entity/"

RDFS_COMMENT = "http://www.w3.org/2000/01/rdf-schema#comment"

TIMESTAMP_PATTERN = re.compile(r"^\d{2}_\d{2}_\d{4}_\d{2}_\d{2}_\d{2}$")
TIMESTAMP_FORMAT = "%d_%m_%Y_%H_%M_%S"  # day-first; zero-padded; UTC


@dataclass(frozen=True)
class GraphConfig:
    event_namespace: str = DEFAULT_EVENT_NAMESPACE
    ontology_namespace: str = DEFAULT_ONTOLOGY_NAMESPACE
    wikidata_prefix: str = DEFAULT_WIKIDATA_PREFIX

    @property
    def event_class_iri(self) -> str:
        return self.ontology_namespace + "Event"

    def prop(self, name: str) -> str:
        return self.ontology_namespace + name


DEFAULT_GRAPH_CONFIG = GraphConfig()


@dataclass(frozen=True)
class TypeQidTable:
    """Wikidata QID for each of the nine event types (oos has none)."""

    entries: dict[str, str]

    def __post_init__(self):
        expected = set(EVENT_TYPES) - {OOS}
        if set(self.entries) != expected:
            missing = expected - set(self.entries)
            extra = set(self.entries) - expected
            raise ValueError(f"type table must cover exactly the non-oos types "
                             f"(missing={sorted(missing)}, extra={sorted(extra)})")
        for label, qid in self.entries.items():
            if not QID_PATTERN.match(qid):
                raise ValueError(f"invalid QID {qid!r} for type {label!r}")


def load_type_qids(path: str | Path) -> TypeQidTable:
    """Read type_qids.tsv (columns: event_type, qid, provenance)."""
    entries = {}
    for line_no, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) < 2:
            raise ValueError(f"{path}:{line_no}: expected event_type<TAB>qid[<TAB>provenance]")
        entries[parts[0].strip()] = parts[1].strip()
    return TypeQidTable(entries=entries)


def event_type_to_qid(event_type: str, table: TypeQidTable) -> str:
    if event_type == OOS:
        raise OosHasNoType("oos mentions have no Wikidata event type")
    return table.entries[event_type]


def format_timestamp(instant: datetime) -> str:
    """Render an instant as DD_MM_YYYY_HH_MM_SS in UTC.

    Naive datetimes are taken to already be UTC.
    """
    if instant.tzinfo is not None:
        instant = instant.astimezone(timezone.utc)
    return instant.strftime(TIMESTAMP_FORMAT)


@dataclass(frozen=True)
class EventGraph:
    id: str
    event_class_iri: str
    wikidata_type_iri: str | None  # absent for oos
    comment: str
    localities: tuple[str, ...]  # full Wikidata entity IRIs
    impacted: tuple[str, ...]
    publisher: str
    timestamp: str

    def __post_init__(self):
        if not self.comment:
            raise ValueError("event comment must be non-empty")
        if not TIMESTAMP_PATTERN.match(self.timestamp):
            raise ValueError(f"bad timestamp {self.timestamp!r}")


def build_event_graph(
    mention: TypedMention,
    entities: list[LinkedEntity],
    publisher: str,
    instant: datetime,
    table: TypeQidTable,
    config: GraphConfig = DEFAULT_GRAPH_CONFIG,
) -> EventGraph:
    """Assemble one event node; every entity must already carry a QID."""
    for ent in entities:
        if not ent.qid:
            raise ValueError(f"entity {ent.surface!r} reached graph assembly without a QID")
    type_iri = None
    if mention.event_type != OOS:
        type_iri = config.wikidata_prefix + event_type_to_qid(mention.event_type, table)
    return EventGraph(
        id=config.event_namespace + str(uuid.uuid4()),
        event_class_iri=config.event_class_iri,
        wikidata_type_iri=type_iri,
        comment=mention.mention.text,
        localities=tuple(
            config.wikidata_prefix + e.qid for e in entities if e.role == ROLE_LOCALITY
        ),
        impacted=tuple(
            config.wikidata_prefix + e.qid for e in entities if e.role != ROLE_LOCALITY
        ),
        publisher=publisher,
        timestamp=format_timestamp(instant),
    )


def to_jsonld_dict(g: EventGraph, config: GraphConfig = DEFAULT_GRAPH_CONFIG) -> dict:
    """Expanded-form JSON-LD as a dict with a fixed key order.

    Empty locality/impact lists drop their keys entirely.
    """
    doc: dict = {"@id": g.id}
    type_iris = [g.event_class_iri]
    if g.wikidata_type_iri:
        type_iris.append(g.wikidata_type_iri)
    doc["@type"] = type_iris
    doc[RDFS_COMMENT] = [{"@value": g.comment}]
    if g.impacted:
        doc[config.prop("hasImpactOn")] = [{"@id": iri} for iri in g.impacted]
    if g.localities:
        doc[config.prop("hasLocality")] = [{"@id": iri} for iri in g.localities]
    doc[config.prop("hasPublisher")] = [{"@value": g.publisher}]
    doc[config.prop("hasTimestamp")] = [{"@value": g.timestamp}]
    return doc


def serialize_jsonld(g: EventGraph, config: GraphConfig = DEFAULT_GRAPH_CONFIG) -> str:
    return json.dumps(to_jsonld_dict(g, config), ensure_ascii=False, indent=2)


def parse_jsonld(document: str | dict, config: GraphConfig = DEFAULT_GRAPH_CONFIG) -> EventGraph:
    """Rebuild an EventGraph from its serialized form (round-trip inverse)."""
    doc = json.loads(document) if isinstance(document, str) else document
    type_iris = doc.get("@type", [])
    wikidata_type = None
    for iri in type_iris:
        if iri != config.event_class_iri:
            wikidata_type = iri
    return EventGraph(
        id=doc["@id"],
        event_class_iri=type_iris[0] if type_iris else config.event_class_iri,
        wikidata_type_iri=wikidata_type,
        comment=doc[RDFS_COMMENT][0]["@value"],
        localities=tuple(o["@id"] for o in doc.get(config.prop("hasLocality"), [])),
        impacted=tuple(o["@id"] for o in doc.get(config.prop("hasImpactOn"), [])),
        publisher=doc[config.prop("hasPublisher")][0]["@value"],
        timestamp=doc[config.prop("hasTimestamp")][0]["@value"],
    )
