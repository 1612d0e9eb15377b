"""Shared fixtures: prototype set, service client, generated article fixtures."""

import json

import pytest
from fastapi.testclient import TestClient

from eventmon.classify import fit_prototypes, load_seed_examples
from eventmon.config import BUNDLED_FIXTURE, BUNDLED_SEED_HEADLINES, load_config
from eventmon.service import create_app

GOLDEN_HEADLINE = (
    "Hamburg shooting : Multiple dead after attack at Jehovah Witness church in Germany"
)

LANGUAGES = ("English", "German", "Spanish", "eng", "french")


def make_records(n, start=0):
    """Deterministic article records cycling through several languages."""
    records = []
    for i in range(start, start + n):
        records.append(
            {
                "url": f"https://news.example/article/{i}",
                "title": f"Storm update number {i}, coastal towns on alert",
                "language": LANGUAGES[i % len(LANGUAGES)],
                "seendate": f"20230310T{i % 24:02d}{i % 60:02d}00Z",
                "domain": "news.example",
            }
        )
    return records


def write_records(path, records):
    path.write_text(json.dumps(records, ensure_ascii=False), encoding="utf-8")
    return str(path)


@pytest.fixture(scope="session")
def protos():
    return fit_prototypes(load_seed_examples(BUNDLED_SEED_HEADLINES))


@pytest.fixture(scope="session")
def fixture_300(tmp_path_factory):
    """A 300-record article fixture for cap and filter tests."""
    path = tmp_path_factory.mktemp("corpus") / "articles_300.json"
    return write_records(path, make_records(300))


@pytest.fixture
def service_config(tmp_path):
    return load_config(overrides={"data_dir": str(tmp_path / "events")})


@pytest.fixture
def client(service_config):
    with TestClient(create_app(service_config)) as c:
        yield c


@pytest.fixture(scope="session")
def bundled_fixture_records():
    return json.loads(BUNDLED_FIXTURE.read_text(encoding="utf-8"))
