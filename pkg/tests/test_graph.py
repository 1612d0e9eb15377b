"""Event graph assembly, timestamp formatting, and JSON-LD serialization."""

import json
import re
import uuid
from datetime import datetime, timezone

import numpy as np
import pytest

from eventmon.classify import TypedMention
from eventmon.config import BUNDLED_TYPE_QIDS
from eventmon.errors import OosHasNoType
from eventmon.graph import (
    DEFAULT_EVENT_NAMESPACE,
    DEFAULT_ONTOLOGY_NAMESPACE,
    DEFAULT_WIKIDATA_PREFIX,
    RDFS_COMMENT,
    EventGraph,
    GraphConfig,
    TypeQidTable,
    build_event_graph,
    event_type_to_qid,
    format_timestamp,
    load_type_qids,
    parse_jsonld,
    serialize_jsonld,
    to_jsonld_dict,
)
from eventmon.ingest import MentionText
from eventmon.linking import LinkedEntity

INSTANT = datetime(2023, 3, 15, 17, 57, 56, tzinfo=timezone.utc)

GOLDEN_COMMENT = (
    "Hamburg shooting: Multiple dead after attack at Jehovah Witness church in Germany"
)


@pytest.fixture(scope="module")
def type_table():
    return load_type_qids(BUNDLED_TYPE_QIDS)


def typed(text, event_type, confidence=0.9):
    vec = np.zeros(8)
    vec[0] = 1.0
    return TypedMention(MentionText(text), vec, event_type, confidence)


def golden_entities():
    return [
        LinkedEntity("Hamburg", "Hamburg", "locality", "Q1055"),
        LinkedEntity("Jehovah Witness", "Jehovah's Witnesses", "impacted", "Q35269"),
        LinkedEntity("Germany", "Germany", "locality", "Q183"),
    ]


def build_golden_graph(table):
    return build_event_graph(
        typed(GOLDEN_COMMENT, "shooting"),
        golden_entities(),
        "HiTec",
        INSTANT,
        table,
    )


def test_type_table_golden(type_table):
    assert event_type_to_qid("shooting", type_table) == "Q2252077"


def test_type_table_covers_all_nine(type_table):
    assert len(type_table.entries) == 9
    for label, qid in type_table.entries.items():
        assert re.match(r"^Q[1-9][0-9]*$", qid)
    assert event_type_to_qid("earthquake", type_table) == type_table.entries["earthquake"]


def test_oos_has_no_type(type_table):
    with pytest.raises(OosHasNoType):
        event_type_to_qid("oos", type_table)


def test_type_table_must_be_total():
    good = {t: f"Q{i + 1}" for i, t in enumerate(
        ("tropical_storm", "flood", "shooting", "covid", "earthquake",
         "hostage", "fire", "wildfire", "explosion"))}
    TypeQidTable(entries=good)
    missing = dict(good)
    del missing["fire"]
    with pytest.raises(ValueError):
        TypeQidTable(entries=missing)
    extra = dict(good)
    extra["oos"] = "Q1"
    with pytest.raises(ValueError):
        TypeQidTable(entries=extra)
    bad_qid = dict(good)
    bad_qid["flood"] = "Q0123"
    with pytest.raises(ValueError):
        TypeQidTable(entries=bad_qid)


def test_format_timestamp_examples():
    assert format_timestamp(INSTANT) == "15_03_2023_17_57_56"
    assert format_timestamp(datetime(2000, 1, 1, tzinfo=timezone.utc)) == "01_01_2000_00_00_00"
    assert format_timestamp(
        datetime(1999, 12, 31, 23, 59, 59, tzinfo=timezone.utc)
    ) == "31_12_1999_23_59_59"


def test_format_timestamp_converts_zones():
    from datetime import timedelta
    cet = timezone(timedelta(hours=1))
    assert format_timestamp(datetime(2023, 3, 15, 18, 57, 56, tzinfo=cet)) == (
        "15_03_2023_17_57_56"
    )
    naive = datetime(2023, 3, 15, 17, 57, 56)  # naive means UTC
    assert format_timestamp(naive) == "15_03_2023_17_57_56"


def test_golden_graph_content(type_table):
    g = build_golden_graph(type_table)
    assert g.id.startswith(DEFAULT_EVENT_NAMESPACE)
    uuid.UUID(g.id[len(DEFAULT_EVENT_NAMESPACE):])  # id tail is a real UUID
    assert g.event_class_iri == DEFAULT_ONTOLOGY_NAMESPACE + "Event"
    assert g.wikidata_type_iri == DEFAULT_WIKIDATA_PREFIX + "Q2252077"
    assert g.comment == GOLDEN_COMMENT
    assert g.localities == (DEFAULT_WIKIDATA_PREFIX + "Q1055",
                            DEFAULT_WIKIDATA_PREFIX + "Q183")
    assert g.impacted == (DEFAULT_WIKIDATA_PREFIX + "Q35269",)
    assert g.publisher == "HiTec"
    assert g.timestamp == "15_03_2023_17_57_56"


def test_oos_graph_is_minimal(type_table):
    g = build_event_graph(typed("quiet day in town", "oos", 0.1), [], "HiTec",
                          INSTANT, type_table)
    assert g.wikidata_type_iri is None
    assert g.localities == () and g.impacted == ()
    doc = to_jsonld_dict(g)
    assert list(doc) == ["@id", "@type", RDFS_COMMENT,
                         DEFAULT_ONTOLOGY_NAMESPACE + "hasPublisher",
                         DEFAULT_ONTOLOGY_NAMESPACE + "hasTimestamp"]
    assert doc["@type"] == [DEFAULT_ONTOLOGY_NAMESPACE + "Event"]


def test_locality_order_preserved(type_table):
    entities = [
        LinkedEntity("Germany", "Germany", "locality", "Q183"),
        LinkedEntity("Hamburg", "Hamburg", "locality", "Q1055"),
    ]
    g = build_event_graph(typed("flood in Germany and Hamburg", "flood"), entities,
                          "HiTec", INSTANT, type_table)
    assert g.localities == (DEFAULT_WIKIDATA_PREFIX + "Q183",
                            DEFAULT_WIKIDATA_PREFIX + "Q1055")


def test_entity_without_qid_rejected(type_table):
    bare = [LinkedEntity("Hamburg", "Hamburg", "locality", None)]
    with pytest.raises(ValueError):
        build_event_graph(typed("Hamburg flood", "flood"), bare, "HiTec",
                          INSTANT, type_table)


def test_fresh_ids(type_table):
    ids = {build_golden_graph(type_table).id for _ in range(500)}
    assert len(ids) == 500
    # uuid4 collisions are treated as impossible; spot-check at volume
    draws = {str(uuid.uuid4()) for _ in range(100_000)}
    assert len(draws) == 100_000


def test_serialized_key_order(type_table):
    doc = to_jsonld_dict(build_golden_graph(type_table))
    assert list(doc) == [
        "@id",
        "@type",
        RDFS_COMMENT,
        DEFAULT_ONTOLOGY_NAMESPACE + "hasImpactOn",
        DEFAULT_ONTOLOGY_NAMESPACE + "hasLocality",
        DEFAULT_ONTOLOGY_NAMESPACE + "hasPublisher",
        DEFAULT_ONTOLOGY_NAMESPACE + "hasTimestamp",
    ]


def test_serialized_shapes(type_table):
    doc = to_jsonld_dict(build_golden_graph(type_table))
    assert doc["@type"] == [DEFAULT_ONTOLOGY_NAMESPACE + "Event",
                            DEFAULT_WIKIDATA_PREFIX + "Q2252077"]
    assert doc[RDFS_COMMENT] == [{"@value": GOLDEN_COMMENT}]
    assert doc[DEFAULT_ONTOLOGY_NAMESPACE + "hasLocality"] == [
        {"@id": DEFAULT_WIKIDATA_PREFIX + "Q1055"},
        {"@id": DEFAULT_WIKIDATA_PREFIX + "Q183"},
    ]
    assert doc[DEFAULT_ONTOLOGY_NAMESPACE + "hasImpactOn"] == [
        {"@id": DEFAULT_WIKIDATA_PREFIX + "Q35269"}
    ]
    assert doc[DEFAULT_ONTOLOGY_NAMESPACE + "hasPublisher"] == [{"@value": "HiTec"}]
    assert doc[DEFAULT_ONTOLOGY_NAMESPACE + "hasTimestamp"] == [
        {"@value": "15_03_2023_17_57_56"}
    ]
    for obj in (doc[DEFAULT_ONTOLOGY_NAMESPACE + "hasLocality"]
                + doc[DEFAULT_ONTOLOGY_NAMESPACE + "hasImpactOn"]):
        assert obj["@id"].startswith(DEFAULT_WIKIDATA_PREFIX)


def test_round_trip_through_independent_parser(type_table):
    graphs = [
        build_golden_graph(type_table),
        build_event_graph(typed("quiet day", "oos", 0.1), [], "HiTec", INSTANT,
                          type_table),
        build_event_graph(
            typed("Hochwasser in Köln: Straßen überflutet", "flood"),
            [LinkedEntity("Köln", "Cologne", "locality", "Q365")],
            "HiTec", INSTANT, type_table),
    ]
    for g in graphs:
        text = serialize_jsonld(g)
        reparsed = json.loads(text)  # independent of parse_jsonld
        assert reparsed["@id"] == g.id
        assert parse_jsonld(text) == g


def test_custom_namespaces():
    cfg = GraphConfig(event_namespace="https://events.example/id/",
                      ontology_namespace="https://onto.example/core#",
                      wikidata_prefix="http://www.wikidata.org/entity/")
    assert cfg.event_class_iri == "https://onto.example/core#Event"
    assert cfg.prop("hasLocality") == "https://onto.example/core#hasLocality"
    table = TypeQidTable(entries={t: "Q1" for t in (
        "tropical_storm", "flood", "shooting", "covid", "earthquake",
        "hostage", "fire", "wildfire", "explosion")})
    g = build_event_graph(typed("flood report", "flood"), [], "Pub", INSTANT,
                          table, cfg)
    assert g.id.startswith("https://events.example/id/")
    doc = to_jsonld_dict(g, cfg)
    assert "https://onto.example/core#hasPublisher" in doc
    assert parse_jsonld(serialize_jsonld(g, cfg), cfg) == g


def test_event_graph_validation():
    with pytest.raises(ValueError):
        EventGraph(id="https://x.example/1", event_class_iri="https://x.example#Event",
                   wikidata_type_iri=None, comment="", localities=(), impacted=(),
                   publisher="HiTec", timestamp="15_03_2023_17_57_56")
    with pytest.raises(ValueError):
        EventGraph(id="https://x.example/1", event_class_iri="https://x.example#Event",
                   wikidata_type_iri=None, comment="ok", localities=(), impacted=(),
                   publisher="HiTec", timestamp="2023-03-15T17:57:56Z")


def test_load_type_qids_rejects_short_row(tmp_path):
    path = tmp_path / "types.tsv"
    path.write_text("shooting\n", encoding="utf-8")
    with pytest.raises(ValueError):
        load_type_qids(path)
