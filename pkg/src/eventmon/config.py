"""Service configuration: defaults, JSON config file, environment overrides.

Precedence (lowest to highest): built-in defaults, config file, environment
variables, explicit CLI flags.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field, replace
from pathlib import Path

from .embed import EmbedderConfig
from .graph import GraphConfig
from .ingest import DEFAULT_BASE_URL, MAX_RECORDS_CAP
from .viz import DbscanParams

_DATA_DIR = Path(__file__).parent / "data"

BUNDLED_GAZETTEER = _DATA_DIR / "gazetteer.tsv"
BUNDLED_WIKIMAP = _DATA_DIR / "wikimap.tsv"
BUNDLED_TYPE_QIDS = _DATA_DIR / "type_qids.tsv"
BUNDLED_SEED_HEADLINES = _DATA_DIR / "seed_headlines.tsv"
BUNDLED_FIXTURE = _DATA_DIR / "fixture_hamburg.json"

DEFAULT_PUBLISHER = "HiTec"


@dataclass(frozen=True)
class ServiceConfig:
    listen_addr: str = "127.0.0.1:8099"
    gdelt_base_url: str = DEFAULT_BASE_URL
    source: str = "fixture"
    fixture_path: str = str(BUNDLED_FIXTURE)
    max_records: int = MAX_RECORDS_CAP
    embedder: EmbedderConfig = field(default_factory=EmbedderConfig)
    oos_threshold: float = 0.5
    dbscan: DbscanParams = field(default_factory=DbscanParams)
    publisher: str = DEFAULT_PUBLISHER
    graph: GraphConfig = field(default_factory=GraphConfig)
    data_dir: str = "./eventmon_data"
    gazetteer_path: str = str(BUNDLED_GAZETTEER)
    wikimap_path: str = str(BUNDLED_WIKIMAP)
    type_qids_path: str = str(BUNDLED_TYPE_QIDS)
    seed_headlines_path: str = str(BUNDLED_SEED_HEADLINES)
    linker_endpoint: str | None = None
    linker_score_floor: float = 0.5
    fetch_timeout: float = 30.0

    @property
    def host(self) -> str:
        return self.listen_addr.rsplit(":", 1)[0]

    @property
    def port(self) -> int:
        return int(self.listen_addr.rsplit(":", 1)[1])


def _from_dict(doc: dict) -> ServiceConfig:
    kwargs = {}
    simple_keys = (
        "listen_addr", "gdelt_base_url", "source", "fixture_path", "max_records",
        "oos_threshold", "publisher", "data_dir", "gazetteer_path", "wikimap_path",
        "type_qids_path", "seed_headlines_path", "linker_endpoint",
        "linker_score_floor", "fetch_timeout",
    )
    for key in simple_keys:
        if key in doc:
            kwargs[key] = doc[key]
    if "embedder" in doc:
        emb = dict(doc["embedder"])
        if "ngram_range" in emb:
            emb["ngram_range"] = tuple(emb["ngram_range"])
        kwargs["embedder"] = EmbedderConfig(**emb)
    if "dbscan" in doc:
        kwargs["dbscan"] = DbscanParams(**doc["dbscan"])
    if "graph" in doc:
        kwargs["graph"] = GraphConfig(**doc["graph"])
    unknown = set(doc) - set(simple_keys) - {"embedder", "dbscan", "graph"}
    if unknown:
        raise ValueError(f"unknown config keys: {sorted(unknown)}")
    return ServiceConfig(**kwargs)


# env var -> (target, caster); nested targets are dotted
_ENV_MAP = {
    "MOD_LISTEN_ADDR": ("listen_addr", str),
    "MOD_GDELT_BASE_URL": ("gdelt_base_url", str),
    "MOD_SOURCE": ("source", str),
    "MOD_FIXTURE_PATH": ("fixture_path", str),
    "MOD_MAX_RECORDS": ("max_records", int),
    "MOD_OOS_THRESHOLD": ("oos_threshold", float),
    "MOD_DBSCAN_EPS": ("dbscan.eps", float),
    "MOD_DBSCAN_MIN_PTS": ("dbscan.min_pts", int),
    "MOD_PUBLISHER": ("publisher", str),
    "MOD_EVENT_NAMESPACE": ("graph.event_namespace", str),
    "MOD_DATA_DIR": ("data_dir", str),
    "MOD_EMBED_ENDPOINT": ("embedder.endpoint", str),
    "MOD_LINKER_ENDPOINT": ("linker_endpoint", str),
}


def _apply_env(cfg: ServiceConfig, env=os.environ) -> ServiceConfig:
    for var, (target, cast) in _ENV_MAP.items():
        if var not in env:
            continue
        value = cast(env[var])
        if "." in target:
            attr, sub = target.split(".")
            nested = replace(getattr(cfg, attr), **{sub: value})
            cfg = replace(cfg, **{attr: nested})
        else:
            cfg = replace(cfg, **{target: value})
    return cfg


def load_config(
    path: str | Path | None = None,
    overrides: dict | None = None,
    env=os.environ,
) -> ServiceConfig:
    """Build the effective config from file, environment, and explicit overrides."""
    if path is not None:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
        cfg = _from_dict(doc)
    else:
        cfg = ServiceConfig()
    cfg = _apply_env(cfg, env)
    for key, value in (overrides or {}).items():
        if value is not None:
            cfg = replace(cfg, **{key: value})
    return cfg
