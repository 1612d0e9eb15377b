"""Text embeddings behind a pluggable backend.

The reference backend is signed feature hashing over character n-grams:
deterministic, dependency-free, and close enough to a sentence encoder for
the clustering and classification layers to behave sensibly. A remote
backend can swap in a real model over HTTP without touching callers.

Hashing constants (portable golden tests depend on these):
  BLAKE2b, 8-byte digest, key ``HASH_KEY``; low bit of the digest gives the
  sign, the remaining bits select the bucket.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

import numpy as np
import requests

from .errors import DimensionMismatch, EmptyText, RemoteUnavailable
from .ingest import MentionText

HASH_KEY = b"eventmon-embed-v1"

DEFAULT_DIMENSION = 256
DEFAULT_NGRAM_RANGE = (3, 5)


@dataclass(frozen=True)
class EmbedderConfig:
    backend: str = "reference"  # "reference" or "remote"
    dimension: int = DEFAULT_DIMENSION
    ngram_range: tuple[int, int] = DEFAULT_NGRAM_RANGE
    endpoint: str | None = None
    timeout: float = 10.0

    def __post_init__(self):
        if self.backend not in ("reference", "remote"):
            raise ValueError(f"unknown backend {self.backend!r}")
        if self.dimension < 8:
            raise ValueError("dimension must be >= 8")
        lo, hi = self.ngram_range
        if not (1 <= lo <= hi):
            raise ValueError(f"bad ngram_range {self.ngram_range!r}")
        if self.backend == "remote" and not self.endpoint:
            raise ValueError("remote backend needs an endpoint")


def _hash_ngram(ngram: str) -> tuple[int, int]:
    """Map an n-gram to (bucket-source integer, sign bit)."""
    digest = hashlib.blake2b(ngram.encode("utf-8"), digest_size=8, key=HASH_KEY).digest()
    h = int.from_bytes(digest, "big")
    return h >> 1, h & 1


def _char_ngrams(text: str, lo: int, hi: int):
    for n in range(lo, hi + 1):
        for i in range(len(text) - n + 1):
            yield text[i : i + n]


def _embed_reference(text: str, cfg: EmbedderConfig) -> np.ndarray:
    vec = np.zeros(cfg.dimension, dtype=np.float64)
    lo, hi = cfg.ngram_range
    for ngram in _char_ngrams(text.lower(), lo, hi):
        bucket, sign_bit = _hash_ngram(ngram)
        vec[bucket % cfg.dimension] += 1.0 if sign_bit else -1.0
    norm = np.linalg.norm(vec)
    if norm == 0.0:
        # text shorter than the smallest n-gram: fall back to 1-grams so
        # every non-empty text embeds somewhere
        for ngram in _char_ngrams(text.lower(), 1, max(1, lo - 1)):
            bucket, sign_bit = _hash_ngram(ngram)
            vec[bucket % cfg.dimension] += 1.0 if sign_bit else -1.0
        norm = np.linalg.norm(vec)
    return vec / norm


def _post_remote(texts: list[str], cfg: EmbedderConfig) -> list[np.ndarray]:
    try:
        resp = requests.post(cfg.endpoint, json={"texts": texts}, timeout=cfg.timeout)
        resp.raise_for_status()
        payload = resp.json()
    except requests.RequestException as exc:
        raise RemoteUnavailable(f"embedding endpoint failed: {exc}") from exc
    except ValueError as exc:
        raise RemoteUnavailable(f"embedding endpoint returned non-JSON: {exc}") from exc
    vectors = payload.get("vectors") if isinstance(payload, dict) else None
    if not isinstance(vectors, list) or len(vectors) != len(texts):
        raise RemoteUnavailable("embedding endpoint returned a malformed vector list")
    out = []
    for i, values in enumerate(vectors):
        vec = np.asarray(values, dtype=np.float64)
        if vec.shape != (cfg.dimension,):
            raise DimensionMismatch(
                f"vector {i}: expected dimension {cfg.dimension}, got {vec.shape}"
            )
        norm = np.linalg.norm(vec)
        if norm == 0.0 or not np.isfinite(norm):
            raise DimensionMismatch(f"vector {i} is not normalizable")
        out.append(vec / norm)
    return out


def embed(text: MentionText | str, cfg: EmbedderConfig = EmbedderConfig()) -> np.ndarray:
    """Embed one text as a unit-norm float64 vector of cfg.dimension entries."""
    raw = text.text if isinstance(text, MentionText) else text
    if not raw:
        raise EmptyText("cannot embed empty text")
    if cfg.backend == "remote":
        return _post_remote([raw], cfg)[0]
    return _embed_reference(raw, cfg)


def embed_batch(
    texts: list[MentionText | str], cfg: EmbedderConfig = EmbedderConfig()
) -> list[np.ndarray]:
    """Embed texts in order; element i equals embed(texts[i], cfg)."""
    raws = [t.text if isinstance(t, MentionText) else t for t in texts]
    for i, raw in enumerate(raws):
        if not raw:
            raise EmptyText(f"cannot embed empty text at index {i}")
    if not raws:
        return []
    if cfg.backend == "remote":
        try:
            return _post_remote(raws, cfg)
        except DimensionMismatch as exc:
            raise DimensionMismatch(f"batch embedding failed: {exc}") from exc
    return [_embed_reference(raw, cfg) for raw in raws]


def cosine(a: np.ndarray, b: np.ndarray) -> float:
    """Cosine similarity of two unit vectors."""
    return float(np.dot(a, b))
