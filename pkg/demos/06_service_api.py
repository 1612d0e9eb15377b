"""Tour the HTTP API end to end without leaving the process.

Uses the in-process test client, so no port is opened; `eventmon serve` runs
the same app for real. Needs the test extra (httpx).
"""

import tempfile

from fastapi.testclient import TestClient

from eventmon.config import load_config
from eventmon.service import create_app

config = load_config(overrides={"data_dir": tempfile.mkdtemp(prefix="eventmon-demo-")})
client = TestClient(create_app(config))

print("GET /health ->", client.get("/health").json())

doc = client.post("/api/extract", json={
    "text": "Hamburg shooting : Multiple dead after attack at Jehovah Witness church in Germany",
    "keyword": "hamburg",
}).json()
print("\nPOST /api/extract stored event", doc["@id"].rsplit("/", 1)[-1])
print("  type IRIs:", doc["@type"])

resp = client.get("/api/visualize", params={"keyword": "hamburg", "date": "2023-03-10"})
body = resp.json()
print("\nGET /api/visualize counts:", body["counts"])
clusters = sorted({p["cluster_id"] for p in body["points_clustering"]})
print("  cluster ids:", clusters)

events = client.get("/api/events", params={"keyword": "hamburg"}).json()["events"]
print(f"\nGET /api/events -> {len(events)} stored event(s), newest first")

bad = client.get("/api/visualize", params={"keyword": "", "date": "2023-03-10"})
print("\nvalidation errors use one body shape:")
print(f"  {bad.status_code} ->", bad.json())
