"""Entity extraction and Wikidata resolution.

The reference linker is a gazetteer: curated surface forms mapped to
Wikipedia titles, each carrying its relation role (locality vs impacted).
A remote linker endpoint can contribute candidates instead; either way the
Wikipedia title is mapped to a Wikidata QID before graph assembly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

import requests

from .errors import FormatError, NotFound, RemoteUnavailable
from .ingest import MentionText

ROLE_LOCALITY = "locality"
ROLE_IMPACTED = "impacted"
_ROLES = (ROLE_LOCALITY, ROLE_IMPACTED)

QID_PATTERN = re.compile(r"^Q[1-9][0-9]*$")


@dataclass(frozen=True)
class GazetteerEntry:
    surface_forms: tuple[str, ...]
    wikipedia_title: str
    role: str

    def __post_init__(self):
        if not self.surface_forms or any(not s for s in self.surface_forms):
            raise ValueError("gazetteer entry needs non-empty surface forms")
        if self.role not in _ROLES:
            raise ValueError(f"unknown role {self.role!r}")


@dataclass(frozen=True)
class WikiMapping:
    entries: dict[str, str]  # wikipedia title -> QID

    def __post_init__(self):
        for title, qid in self.entries.items():
            if not QID_PATTERN.match(qid):
                raise ValueError(f"invalid QID {qid!r} for {title!r}")


@dataclass(frozen=True)
class LinkedEntity:
    surface: str
    wikipedia_title: str
    role: str
    qid: str | None = None


def load_gazetteer(path: str | Path) -> list[GazetteerEntry]:
    """Read gazetteer TSV (surface_form, wikipedia_title, role; one row per surface).

    Rows sharing (wikipedia_title, role) merge into one entry.
    """
    grouped: dict[tuple[str, str], list[str]] = {}
    order: list[tuple[str, str]] = []
    for line_no, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise ValueError(f"{path}:{line_no}: expected 3 tab-separated columns")
        surface, title, role = (p.strip() for p in parts)
        key = (title, role)
        if key not in grouped:
            grouped[key] = []
            order.append(key)
        grouped[key].append(surface)
    return [
        GazetteerEntry(surface_forms=tuple(grouped[key]), wikipedia_title=key[0], role=key[1])
        for key in order
    ]


def load_wikimap(path: str | Path) -> WikiMapping:
    """Read wikipedia_title -> QID TSV."""
    entries = {}
    for line_no, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise ValueError(f"{path}:{line_no}: expected 2 tab-separated columns")
        entries[parts[0].strip()] = parts[1].strip()
    return WikiMapping(entries=entries)


def link_entities(
    text: MentionText | str, gazetteer: list[GazetteerEntry]
) -> list[LinkedEntity]:
    """Find whole-word, case-insensitive gazetteer matches in the text.

    Overlaps resolve longest-match-first, then leftmost; one hit per entry.
    Output is ordered left-to-right by match position; QIDs not yet attached.
    """
    raw = text.text if isinstance(text, MentionText) else text
    candidates = []  # (start, end, entry_idx, surface slice)
    for idx, entry in enumerate(gazetteer):
        for surface in entry.surface_forms:
            pattern = re.compile(r"\b" + re.escape(surface) + r"\b", re.IGNORECASE)
            for m in pattern.finditer(raw):
                candidates.append((m.start(), m.end(), idx, raw[m.start() : m.end()]))

    candidates.sort(key=lambda c: (-(c[1] - c[0]), c[0], c[2]))
    taken_spans: list[tuple[int, int]] = []
    taken_entries: set[int] = set()
    accepted = []
    for start, end, idx, surface in candidates:
        if idx in taken_entries:
            continue
        if any(start < e and s < end for s, e in taken_spans):
            continue
        taken_spans.append((start, end))
        taken_entries.add(idx)
        entry = gazetteer[idx]
        accepted.append(
            (start, LinkedEntity(surface=surface, wikipedia_title=entry.wikipedia_title, role=entry.role))
        )
    accepted.sort(key=lambda pair: pair[0])
    return [ent for _, ent in accepted]


def wikipedia_to_wikidata(title: str, mapping: WikiMapping) -> str:
    """Exact-title lookup; raises NotFound when the title is unmapped."""
    try:
        return mapping.entries[title]
    except KeyError:
        raise NotFound(f"no Wikidata mapping for {title!r}") from None


def attach_qids(
    entities: list[LinkedEntity],
    mapping: WikiMapping,
    on_missing: str = "skip",
) -> list[LinkedEntity]:
    """Resolve each entity's Wikipedia title to a QID.

    on_missing: "skip" drops unmapped entities; "error" raises NotFound.
    """
    out = []
    for ent in entities:
        try:
            qid = wikipedia_to_wikidata(ent.wikipedia_title, mapping)
        except NotFound:
            if on_missing == "error":
                raise
            continue
        out.append(LinkedEntity(ent.surface, ent.wikipedia_title, ent.role, qid))
    return out


def resolve_remote(
    text: MentionText | str,
    endpoint: str,
    gazetteer: list[GazetteerEntry] | None = None,
    score_floor: float = 0.5,
    timeout: float = 10.0,
) -> list[LinkedEntity]:
    """Ask a remote linker for candidates; keep the best per span above the floor.

    Roles come from the gazetteer when the Wikipedia title is known there,
    otherwise default to impacted. QIDs are not attached here.
    """
    raw = text.text if isinstance(text, MentionText) else text
    try:
        resp = requests.post(endpoint, json={"text": raw}, timeout=timeout)
        resp.raise_for_status()
        payload = resp.json()
    except requests.RequestException as exc:
        raise RemoteUnavailable(f"linker endpoint failed: {exc}") from exc
    except ValueError as exc:
        raise FormatError(f"linker endpoint returned non-JSON: {exc}") from exc
    if not isinstance(payload, dict) or not isinstance(payload.get("entities"), list):
        raise FormatError("linker response lacks an 'entities' list")

    roles = {}
    for entry in gazetteer or []:
        roles.setdefault(entry.wikipedia_title, entry.role)

    best_per_span: dict[str, tuple[float, LinkedEntity]] = {}
    span_order: list[str] = []
    for cand in payload["entities"]:
        try:
            span = str(cand["span"])
            title = str(cand["wikipedia_title"])
            score = float(cand["score"])
        except (TypeError, KeyError, ValueError) as exc:
            raise FormatError(f"bad linker candidate {cand!r}: {exc}") from exc
        if score < score_floor:
            continue
        ent = LinkedEntity(
            surface=span,
            wikipedia_title=title,
            role=roles.get(title, ROLE_IMPACTED),
        )
        if span not in best_per_span:
            span_order.append(span)
            best_per_span[span] = (score, ent)
        elif score > best_per_span[span][0]:
            best_per_span[span] = (score, ent)
    return [best_per_span[s][1] for s in span_order]
