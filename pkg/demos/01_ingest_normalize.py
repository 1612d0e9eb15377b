"""Walk through article ingestion: fetch, language filter, normalize, dedupe.

Runs against the bundled fixture so it works offline. Point MOD_GDELT_BASE_URL
at a live endpoint and switch source="live" to query the real article feed.
"""

from datetime import date

from eventmon.config import BUNDLED_FIXTURE
from eventmon.ingest import ArticleQuery, dedupe_mentions, fetch_articles, filter_english, normalize_title

query = ArticleQuery(
    keyword="hamburg",
    date=date(2023, 3, 10),
    source="fixture",
    fixture_path=str(BUNDLED_FIXTURE),
)
articles = fetch_articles(query)
print(f"fetched {len(articles)} articles for {query.keyword!r} on {query.date}")

english = filter_english(articles)
print(f"kept {len(english)} English articles, dropped {len(articles) - len(english)}:")
for a in articles:
    if a not in english:
        print(f"  [{a.language}] {a.title}")

print("\nnormalization fixes spacing around punctuation:")
raw = "Hamburg shooting : Multiple dead after attack at Jehovah Witness church in Germany"
print(f"  before: {raw}")
print(f"  after:  {normalize_title(raw).text}")

mentions = [normalize_title(a.title) for a in english]
unique = dedupe_mentions(mentions)
print(f"\n{len(unique)} unique mentions after dedupe:")
for m in unique:
    print(f"  {m.text}")
