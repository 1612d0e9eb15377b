"""From one headline to a JSON-LD event document.

Chain: normalize -> embed -> classify -> gazetteer linking -> Wikidata QIDs ->
event graph. The output is the same expanded JSON-LD the service returns.
"""

from datetime import datetime, timezone

from eventmon.classify import TypedMention, classify, fit_prototypes, load_seed_examples
from eventmon.config import BUNDLED_GAZETTEER, BUNDLED_SEED_HEADLINES, BUNDLED_TYPE_QIDS, BUNDLED_WIKIMAP
from eventmon.embed import embed
from eventmon.graph import build_event_graph, load_type_qids, serialize_jsonld
from eventmon.ingest import normalize_title
from eventmon.linking import attach_qids, link_entities, load_gazetteer, load_wikimap

headline = "Hamburg shooting : Multiple dead after attack at Jehovah Witness church in Germany"

mention_text = normalize_title(headline)
vector = embed(mention_text)
protos = fit_prototypes(load_seed_examples(BUNDLED_SEED_HEADLINES))
event_type, confidence = classify(vector, protos)
print(f"typed as {event_type} (confidence {confidence:.3f})")

gazetteer = load_gazetteer(BUNDLED_GAZETTEER)
entities = link_entities(mention_text, gazetteer)
print("\nlinked entities (longest match first, one hit per entry):")
for e in entities:
    print(f"  {e.surface!r} -> {e.wikipedia_title} [{e.role}]")

entities = attach_qids(entities, load_wikimap(BUNDLED_WIKIMAP), on_missing="skip")
for e in entities:
    print(f"  {e.wikipedia_title} -> {e.qid}")

mention = TypedMention(mention_text, vector, event_type, confidence)
graph = build_event_graph(
    mention,
    entities,
    publisher="HiTec",
    instant=datetime(2023, 3, 15, 17, 57, 56, tzinfo=timezone.utc),
    table=load_type_qids(BUNDLED_TYPE_QIDS),
)
print("\nJSON-LD document:")
print(serialize_jsonld(graph))
