"""News ingestion: fetch keyword-matched articles, filter to English, normalize titles.

Articles come either from a live GDELT-style document API or from a local JSON
fixture with the same record schema, so the whole pipeline runs offline.
"""

from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass
from datetime import date, datetime, timezone
from pathlib import Path

import requests

from .errors import EmptyTitle, FixtureNotFound, FormatError, NetworkError

MAX_RECORDS_CAP = 250  # upstream API never returns more per query

DEFAULT_BASE_URL = "https://api.gdeltproject.org/api/v2/doc/doc"
BASE_URL_ENV = "MOD_GDELT_BASE_URL"

SEENDATE_FORMAT = "%Y%m%dT%H%M%SZ"

_ENGLISH_LABELS = frozenset({"english", "eng"})


@dataclass(frozen=True)
class ResponseProfile:
    """Field layout of an article-list response.

    The default matches the GDELT DOC 2.0 ``ArtList`` JSON shape; deployments
    pointing at a different upstream can remap keys without code changes.
    """

    articles_key: str = "articles"
    url_key: str = "url"
    title_key: str = "title"
    language_key: str = "language"
    seendate_key: str = "seendate"
    domain_key: str = "domain"


DEFAULT_PROFILE = ResponseProfile()


@dataclass(frozen=True)
class ArticleQuery:
    keyword: str
    date: date
    max_records: int = MAX_RECORDS_CAP
    source: str = "live"  # "live" or "fixture"
    fixture_path: str | None = None

    def __post_init__(self):
        if not self.keyword.strip():
            raise ValueError("keyword must be non-empty")
        if not 0 < self.max_records <= MAX_RECORDS_CAP:
            raise ValueError(f"max_records must be in 1..{MAX_RECORDS_CAP}")
        if self.source not in ("live", "fixture"):
            raise ValueError(f"unknown source {self.source!r}")
        if self.source == "fixture" and not self.fixture_path:
            raise ValueError("fixture source needs a fixture_path")


@dataclass(frozen=True)
class Article:
    url: str
    title: str
    language: str
    seen_at: datetime
    source_domain: str

    def __post_init__(self):
        if not self.url:
            raise ValueError("article url must be non-empty")
        if not self.title:
            raise ValueError("article title must be non-empty")


@dataclass(frozen=True)
class MentionText:
    """A normalized article title; always built through normalize_title."""

    text: str


def fetch_articles(
    query: ArticleQuery,
    base_url: str | None = None,
    profile: ResponseProfile = DEFAULT_PROFILE,
    timeout: float = 30.0,
) -> list[Article]:
    """Fetch at most ``query.max_records`` articles for the query's keyword and day.

    Live mode hits the configured document API; fixture mode reads a local
    JSON article list with the same record schema. Raises NetworkError,
    FormatError, or FixtureNotFound.
    """
    if query.source == "fixture":
        return _read_fixture(query.fixture_path, query.max_records, profile)
    return _fetch_live(query, base_url, profile, timeout)


def _fetch_live(query, base_url, profile, timeout) -> list[Article]:
    url = base_url or os.environ.get(BASE_URL_ENV) or DEFAULT_BASE_URL
    day = query.date.strftime("%Y%m%d")
    params = {
        "query": query.keyword,
        "mode": "artlist",
        "format": "json",
        "maxrecords": query.max_records,
        "startdatetime": f"{day}000000",
        "enddatetime": f"{day}235959",
    }
    try:
        resp = requests.get(url, params=params, timeout=timeout)
        resp.raise_for_status()
    except requests.RequestException as exc:
        raise NetworkError(f"article fetch failed: {exc}") from exc
    try:
        payload = resp.json()
    except ValueError as exc:
        raise FormatError(f"non-JSON response from {url}") from exc
    return _parse_article_list(payload, query.max_records, profile)


def _read_fixture(path, max_records, profile) -> list[Article]:
    p = Path(path)
    if not p.is_file():
        raise FixtureNotFound(str(p))
    try:
        payload = json.loads(p.read_text(encoding="utf-8"))
    except ValueError as exc:
        raise FormatError(f"fixture {p} is not valid JSON") from exc
    return _parse_article_list(payload, max_records, profile)


def _parse_article_list(payload, max_records, profile) -> list[Article]:
    if isinstance(payload, dict):
        records = payload.get(profile.articles_key)
    else:
        records = payload  # fixtures may be a bare array
    if not isinstance(records, list):
        raise FormatError(f"no {profile.articles_key!r} array in response")
    articles = []
    for rec in records[:max_records]:
        if not isinstance(rec, dict):
            raise FormatError(f"article record is not an object: {rec!r}")
        try:
            articles.append(
                Article(
                    url=str(rec[profile.url_key]),
                    title=str(rec[profile.title_key]),
                    language=str(rec.get(profile.language_key, "")),
                    seen_at=_parse_seendate(rec.get(profile.seendate_key)),
                    source_domain=str(rec.get(profile.domain_key, "")),
                )
            )
        except (KeyError, ValueError) as exc:
            raise FormatError(f"bad article record {rec!r}: {exc}") from exc
    return articles


def _parse_seendate(value) -> datetime:
    if not value:
        return datetime(1970, 1, 1, tzinfo=timezone.utc)
    try:
        return datetime.strptime(str(value), SEENDATE_FORMAT).replace(tzinfo=timezone.utc)
    except ValueError as exc:
        raise ValueError(f"bad seendate {value!r}") from exc


def write_fixture(articles: list[Article], path: str | Path) -> None:
    """Snapshot articles to a fixture file that fetch_articles can re-read."""
    records = [
        {
            "url": a.url,
            "title": a.title,
            "language": a.language,
            "seendate": a.seen_at.astimezone(timezone.utc).strftime(SEENDATE_FORMAT),
            "domain": a.source_domain,
        }
        for a in articles
    ]
    Path(path).write_text(json.dumps(records, ensure_ascii=False, indent=1), encoding="utf-8")


def filter_english(articles: list[Article]) -> list[Article]:
    """Keep articles whose language label is English; order preserved."""
    return [a for a in articles if a.language.strip().lower() in _ENGLISH_LABELS]


# Spaces are dropped before closing punctuation and after opening punctuation.
_SPACE_BEFORE = re.compile(r" +(?=[,.!?;:'”)])")
_SPACE_AFTER = re.compile(r"(?<=[(“]) +")


def normalize_title(raw: str) -> MentionText:
    """Collapse whitespace and strip stray spaces around punctuation.

    Idempotent. Raises EmptyTitle when nothing is left.
    """
    text = re.sub(r"\s+", " ", raw).strip()
    text = _SPACE_BEFORE.sub("", text)
    text = _SPACE_AFTER.sub("", text)
    if not text:
        raise EmptyTitle("title is empty after normalization")
    return MentionText(text)


def dedupe_mentions(mentions: list[MentionText]) -> list[MentionText]:
    """Drop exact-string duplicates, keeping the first occurrence."""
    seen = set()
    out = []
    for m in mentions:
        if m.text not in seen:
            seen.add(m.text)
            out.append(m)
    return out
