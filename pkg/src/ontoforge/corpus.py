"""Corpus acquisition: a seed wiki article plus its first-level links.

Articles come either from a live MediaWiki action API or from a directory
of frozen ``<slug>.wiki`` fixture files. Traversal depth is always one:
the seed's links are fetched, theirs are not.
"""

from __future__ import annotations

import hashlib
import json
import os
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from datetime import datetime, timezone
from pathlib import Path

import requests

from .wikitext import extract_links, slugify, strip_markup

# Frozen fixtures carry a pinned timestamp so rebuilds are reproducible.
FIXTURE_FETCHED_AT = "2012-06-01T00:00:00+00:00"

DEFAULT_API_ENV = "ONTOFORGE_WIKI_API"
DEFAULT_USER_AGENT = "ontoforge/0.1 (ontology toolkit; contact: see repo)"


class CorpusError(Exception):
    """Base class for acquisition failures."""


class PageNotFoundError(CorpusError):
    """The wiki (or fixture directory) has no such page."""


class NetworkFetchError(CorpusError):
    """Transport-level failure; retryable, unlike a missing page."""


class SeedFetchError(CorpusError):
    """The seed article itself could not be fetched; fatal for a build."""


class CorpusFormatError(CorpusError):
    """A corpus file record could not be parsed."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class Article:
    """One wiki page reduced to plain text plus its outgoing article links."""

    slug: str
    title: str
    text: str
    links: tuple[str, ...]
    source: str  # "live" or "fixture"
    fetched_at: str
    parse_warning: bool = False

    def __post_init__(self):
        if not self.slug or any(c.isspace() for c in self.slug):
            raise ValueError(f"invalid slug: {self.slug!r}")
        deduped = tuple(dict.fromkeys(link for link in self.links if link != self.slug))
        object.__setattr__(self, "links", deduped)


@dataclass(frozen=True)
class FetchFailure:
    slug: str
    reason: str
    retryable: bool


@dataclass(frozen=True)
class AcquisitionConfig:
    """Knobs for corpus acquisition; politeness settings apply to live mode."""

    source: str = "fixture"  # "fixture" or "live"
    fixture_dir: Path | None = None
    api_url: str | None = None
    user_agent: str = DEFAULT_USER_AGENT
    max_links: int = 500
    max_concurrent: int = 2
    request_delay: float = 0.5
    timeout: float = 30.0

    def digest(self) -> str:
        """Content hash of the semantically relevant acquisition settings."""
        payload = json.dumps(
            {"source": self.source, "max_links": self.max_links, "depth": 1},
            sort_keys=True,
        )
        return hashlib.sha256(payload.encode("utf-8")).hexdigest()

    def resolved_api_url(self) -> str:
        url = self.api_url or os.environ.get(DEFAULT_API_ENV)
        if not url:
            raise SeedFetchError(
                f"live mode needs an API endpoint; set {DEFAULT_API_ENV} or pass api_url"
            )
        return url


@dataclass(frozen=True)
class Corpus:
    """The seed article and every first-level linked article that fetched."""

    seed: str
    articles: dict[str, Article]
    depth: int
    created_at: str
    config_digest: str
    failures: tuple[FetchFailure, ...] = ()
    warnings: tuple[str, ...] = ()

    def __post_init__(self):
        if self.seed not in self.articles:
            raise ValueError(f"seed {self.seed!r} missing from articles")
        seed_links = set(self.articles[self.seed].links)
        for slug in self.articles:
            if slug != self.seed and slug not in seed_links:
                raise ValueError(f"article {slug!r} is not linked from the seed")

    def ordered_articles(self) -> list[Article]:
        """Seed first, then the linked articles in slug order."""
        rest = [a for s, a in sorted(self.articles.items()) if s != self.seed]
        return [self.articles[self.seed]] + rest

    def structurally_equal(self, other: "Corpus") -> bool:
        """Equality that ignores wall-clock fields (created_at, fetched_at)."""
        if (self.seed, self.depth, self.config_digest) != (
            other.seed,
            other.depth,
            other.config_digest,
        ):
            return False
        if set(self.articles) != set(other.articles):
            return False
        for slug, art in self.articles.items():
            oth = other.articles[slug]
            if (art.slug, art.title, art.text, art.links) != (
                oth.slug,
                oth.title,
                oth.text,
                oth.links,
            ):
                return False
        return True


def _utcnow() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def _title_from_slug(slug: str) -> str:
    return slug.replace("_", " ").capitalize()


def _fetch_fixture_markup(slug: str, config: AcquisitionConfig) -> str:
    if config.fixture_dir is None:
        raise PageNotFoundError("fixture mode needs a fixture_dir")
    path = Path(config.fixture_dir) / f"{slug}.wiki"
    if not path.is_file():
        raise PageNotFoundError(f"no fixture page for {slug!r}")
    return path.read_text(encoding="utf-8")


def _fetch_live_markup(slug: str, config: AcquisitionConfig) -> tuple[str, str]:
    """Return (title, wikitext) from the MediaWiki action API."""
    params = {
        "action": "parse",
        "page": slug.replace("_", " "),
        "prop": "wikitext",
        "format": "json",
        "formatversion": "2",
        "redirects": "1",
    }
    headers = {"User-Agent": config.user_agent}
    try:
        resp = requests.get(
            config.resolved_api_url(), params=params, headers=headers, timeout=config.timeout
        )
    except requests.RequestException as exc:
        raise NetworkFetchError(f"fetching {slug!r}: {exc}") from exc
    if resp.status_code >= 500:
        raise NetworkFetchError(f"fetching {slug!r}: HTTP {resp.status_code}")
    try:
        data = resp.json()
    except ValueError as exc:
        raise NetworkFetchError(f"fetching {slug!r}: bad JSON payload") from exc
    if "error" in data:
        code = data["error"].get("code", "")
        if code in {"missingtitle", "pagecannotexist", "invalidtitle"}:
            raise PageNotFoundError(f"no wiki page for {slug!r}")
        raise NetworkFetchError(f"fetching {slug!r}: API error {code}")
    parse = data.get("parse", {})
    return parse.get("title") or _title_from_slug(slug), parse.get("wikitext", "")


def fetch_article(slug: str, config: AcquisitionConfig) -> Article:
    """Fetch one page and reduce it to an Article.

    A markup-stripping hiccup (unbalanced templates or tables) keeps the
    best-effort text and sets ``parse_warning`` rather than failing.
    """
    if not slug or not slug.strip():
        raise ValueError("slug must be non-empty")
    slug = slugify(slug)
    if config.source == "fixture":
        markup = _fetch_fixture_markup(slug, config)
        title = _title_from_slug(slug)
        fetched_at = FIXTURE_FETCHED_AT
    else:
        title, markup = _fetch_live_markup(slug, config)
        fetched_at = _utcnow()
    stripped = strip_markup(markup)
    links = tuple(extract_links(markup))
    return Article(
        slug=slug,
        title=title,
        text=stripped.text,
        links=links,
        source=config.source,
        fetched_at=fetched_at,
        parse_warning=not stripped.clean,
    )


class _PoliteFetcher:
    """Serializes the per-request delay across worker threads."""

    def __init__(self, config: AcquisitionConfig):
        self.config = config
        self._lock = threading.Lock()

    def fetch(self, slug: str) -> Article:
        if self.config.source == "live" and self.config.request_delay > 0:
            with self._lock:
                time.sleep(self.config.request_delay)
        return fetch_article(slug, self.config)


def build_corpus(seed: str, config: AcquisitionConfig) -> Corpus:
    """Fetch the seed plus its first-level links (depth exactly one).

    Individual link failures are recorded on the corpus, not raised; a
    failing seed is fatal. Link lists longer than ``max_links`` are
    truncated with a warning.
    """
    try:
        seed_article = fetch_article(seed, config)
    except CorpusError as exc:
        raise SeedFetchError(f"seed fetch failed: {exc}") from exc

    warnings: list[str] = []
    to_fetch = list(seed_article.links)
    if len(to_fetch) > config.max_links:
        warnings.append(
            f"seed has {len(to_fetch)} links; truncated to max_links={config.max_links}"
        )
        to_fetch = to_fetch[: config.max_links]

    articles: dict[str, Article] = {seed_article.slug: seed_article}
    failures: list[FetchFailure] = []
    fetcher = _PoliteFetcher(config)
    workers = max(1, config.max_concurrent)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = pool.map(_safe_fetch, [(fetcher, slug) for slug in to_fetch])
    for slug, article, failure in results:
        if article is not None:
            articles[slug] = article
        else:
            failures.append(failure)

    return Corpus(
        seed=seed_article.slug,
        articles=articles,
        depth=1,
        created_at=_utcnow(),
        config_digest=config.digest(),
        failures=tuple(failures),
        warnings=tuple(warnings),
    )


def _safe_fetch(job) -> tuple[str, Article | None, FetchFailure | None]:
    fetcher, slug = job
    try:
        return slug, fetcher.fetch(slug), None
    except PageNotFoundError as exc:
        return slug, None, FetchFailure(slug, str(exc), retryable=False)
    except NetworkFetchError as exc:
        return slug, None, FetchFailure(slug, str(exc), retryable=True)


# --- corpus file format: one JSON record per line, header record first ---


def _article_record(article: Article) -> dict:
    return {
        "slug": article.slug,
        "title": article.title,
        "text": article.text,
        "links": list(article.links),
        "source": article.source,
        "fetched_at": article.fetched_at,
    }


def _content_digest(lines: list[str]) -> str:
    h = hashlib.sha256()
    for line in lines:
        h.update(line.encode("utf-8"))
        h.update(b"\n")
    return h.hexdigest()


def corpus_digest(corpus: Corpus) -> str:
    """Content digest over the serialized article records; identifies what
    was mined regardless of where the file lives."""
    records = [
        json.dumps(_article_record(a), ensure_ascii=False, sort_keys=True)
        for a in corpus.ordered_articles()
    ]
    return _content_digest(records)


def save_corpus(corpus: Corpus, path: str | Path) -> None:
    """Write the line-delimited corpus file (UTF-8, LF, header line first)."""
    records = []
    for article in corpus.ordered_articles():
        records.append(json.dumps(_article_record(article), ensure_ascii=False, sort_keys=True))
    header = json.dumps(
        {
            "seed": corpus.seed,
            "depth": corpus.depth,
            "config_digest": corpus.config_digest,
            "created_at": corpus.created_at,
            "content_digest": _content_digest(records),
        },
        ensure_ascii=False,
        sort_keys=True,
    )
    Path(path).write_text("\n".join([header] + records) + "\n", encoding="utf-8")


def load_fixture_corpus(path: str | Path) -> Corpus:
    """Reconstruct a corpus from its file form.

    Malformed records raise with their line number; a content-digest
    mismatch is reported as a warning on the returned corpus.
    """
    raw_lines = Path(path).read_text(encoding="utf-8").split("\n")
    numbered = [(i + 1, line) for i, line in enumerate(raw_lines) if line.strip()]
    if not numbered:
        raise CorpusFormatError("empty corpus file", line=1)

    def parse(lineno: int, line: str, required: tuple[str, ...]) -> dict:
        try:
            record = json.loads(line)
        except json.JSONDecodeError as exc:
            raise CorpusFormatError(f"invalid JSON ({exc.msg})", line=lineno) from exc
        if not isinstance(record, dict):
            raise CorpusFormatError("record is not an object", line=lineno)
        missing = [k for k in required if k not in record]
        if missing:
            raise CorpusFormatError(f"missing fields {missing}", line=lineno)
        return record

    head_no, head_line = numbered[0]
    header = parse(head_no, head_line, ("seed", "depth", "config_digest"))

    articles: dict[str, Article] = {}
    body_lines: list[str] = []
    for lineno, line in numbered[1:]:
        record = parse(lineno, line, ("slug", "title", "text", "links", "fetched_at"))
        body_lines.append(line)
        try:
            article = Article(
                slug=record["slug"],
                title=record["title"],
                text=record["text"],
                links=tuple(record["links"]),
                source=record.get("source", "fixture"),
                fetched_at=record["fetched_at"],
            )
        except (ValueError, TypeError) as exc:
            raise CorpusFormatError(str(exc), line=lineno) from exc
        articles[article.slug] = article

    warnings: list[str] = []
    expected = header.get("content_digest")
    if expected and expected != _content_digest(body_lines):
        warnings.append("content digest mismatch: file was edited after it was written")

    try:
        return Corpus(
            seed=header["seed"],
            articles=articles,
            depth=int(header["depth"]),
            created_at=header.get("created_at", ""),
            config_digest=header["config_digest"],
            warnings=tuple(warnings),
        )
    except (ValueError, TypeError) as exc:
        raise CorpusFormatError(str(exc), line=head_no) from exc
