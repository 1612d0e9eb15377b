"""Event typing by nearest-prototype classification in embedding space.

Each of the nine disaster types gets a centroid fitted from a handful of
labeled seed headlines; a mention whose best cosine similarity stays below
the out-of-scope threshold is typed ``oos``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .embed import EmbedderConfig, embed_batch
from .errors import NoExamples, OosInTraining
from .ingest import MentionText

# Tie-breaking between equally similar prototypes follows this order.
EVENT_TYPES = (
    "tropical_storm",
    "flood",
    "shooting",
    "covid",
    "earthquake",
    "hostage",
    "fire",
    "wildfire",
    "explosion",
    "oos",
)

OOS = "oos"

DEFAULT_OOS_THRESHOLD = 0.5


def _check_event_type(label: str) -> str:
    if label not in EVENT_TYPES:
        raise ValueError(f"unknown event type {label!r}")
    return label


@dataclass(frozen=True)
class PrototypeSet:
    prototypes: dict[str, np.ndarray]  # non-oos event type -> unit centroid
    oos_threshold: float = DEFAULT_OOS_THRESHOLD

    def __post_init__(self):
        if not self.prototypes:
            raise NoExamples("prototype set is empty")
        if not 0.0 < self.oos_threshold < 1.0:
            raise ValueError("oos_threshold must lie in (0, 1)")
        for label in self.prototypes:
            _check_event_type(label)
            if label == OOS:
                raise OosInTraining("oos has no prototype")


@dataclass(frozen=True)
class TypedMention:
    mention: MentionText
    vector: np.ndarray
    event_type: str
    confidence: float


def fit_prototypes(
    examples: list[tuple[MentionText | str, str]],
    cfg: EmbedderConfig = EmbedderConfig(),
    oos_threshold: float = DEFAULT_OOS_THRESHOLD,
) -> PrototypeSet:
    """Fit one unit-norm centroid per labeled type from (text, label) pairs."""
    if not examples:
        raise NoExamples("no labeled examples supplied")
    by_label: dict[str, list] = {}
    for text, label in examples:
        _check_event_type(label)
        if label == OOS:
            raise OosInTraining(f"example {text!r} is labeled oos")
        by_label.setdefault(label, []).append(text)

    prototypes = {}
    for label, texts in by_label.items():
        vectors = np.stack(embed_batch(texts, cfg))
        mean = vectors.mean(axis=0)
        norm = np.linalg.norm(mean)
        if norm == 0.0:
            raise ValueError(f"centroid for {label!r} collapsed to zero")
        prototypes[label] = mean / norm
    return PrototypeSet(prototypes=prototypes, oos_threshold=oos_threshold)


def classify(vector: np.ndarray, protos: PrototypeSet) -> tuple[str, float]:
    """Return (event type, confidence); confidence is the best prototype cosine.

    The argmax type wins when its cosine reaches the oos threshold, otherwise
    the verdict is oos. Ties go to the earlier type in EVENT_TYPES.
    """
    best_label = None
    best_sim = -np.inf
    for label in EVENT_TYPES:
        proto = protos.prototypes.get(label)
        if proto is None:
            continue
        sim = float(np.dot(vector, proto))
        if sim > best_sim:
            best_label, best_sim = label, sim
    if best_sim < protos.oos_threshold:
        return OOS, best_sim
    return best_label, best_sim


def classify_mentions(
    mentions: list[MentionText],
    vectors: list[np.ndarray],
    protos: PrototypeSet,
) -> list[TypedMention]:
    out = []
    for mention, vector in zip(mentions, vectors):
        event_type, confidence = classify(vector, protos)
        out.append(TypedMention(mention, vector, event_type, confidence))
    return out


def save_prototypes(protos: PrototypeSet, path: str | Path) -> None:
    doc = {
        "oos_threshold": protos.oos_threshold,
        "prototypes": {label: vec.tolist() for label, vec in protos.prototypes.items()},
    }
    Path(path).write_text(json.dumps(doc, indent=1), encoding="utf-8")


def load_prototypes(path: str | Path) -> PrototypeSet:
    doc = json.loads(Path(path).read_text(encoding="utf-8"))
    prototypes = {
        label: np.asarray(values, dtype=np.float64)
        for label, values in doc["prototypes"].items()
    }
    return PrototypeSet(prototypes=prototypes, oos_threshold=doc["oos_threshold"])


def load_seed_examples(path: str | Path) -> list[tuple[str, str]]:
    """Read a labeled-headline TSV (columns: label, headline) into (text, label) pairs."""
    pairs = []
    for line_no, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = line.strip("\n")
        if not line or line.startswith("#"):
            continue
        try:
            label, headline = line.split("\t", 1)
        except ValueError:
            raise ValueError(f"{path}:{line_no}: expected 'label<TAB>headline'")
        pairs.append((headline.strip(), _check_event_type(label.strip())))
    return pairs
