"""Deterministic text mining: article text to ranked candidate n-grams.

Pipeline stages: normalize into sentences and tokens, drop stopwords,
drop named entities and numeric expressions, count uni/bi/trigrams per
sentence, then merge and rank across articles by total frequency.
Every stage is a pure function of (input, config).
"""

from __future__ import annotations

import hashlib
import json
import re
from collections import Counter
from dataclasses import dataclass, field, replace
from importlib import resources
from pathlib import Path

from .corpus import Corpus

# Punctuation stripped from token edges. '%' stays so numeric patterns
# like "30%" survive until the numeric-removal stage sees them.
_EDGE_PUNCT = ".,;:!?\"'()[]{}<>«»“”‘’…*|=&/\\-‐–—~`"

_SENTENCE_SPLIT_RE = re.compile(r"(?<=[.!?])\s+|\n+")
_NUMERIC_RE = re.compile(r"^[+-]?\d[\d,]*(?:\.\d+)?%?$|^\d+(?:[-–—]\d+)+%?$")


def load_stopwords(path: str | Path | None = None) -> frozenset[str]:
    """Stopword file: UTF-8, one token per line, # comments allowed."""
    if path is None:
        text = resources.files("ontoforge.data").joinpath("stopwords_en.txt").read_text("utf-8")
    else:
        text = Path(path).read_text(encoding="utf-8")
    words = set()
    for line in text.splitlines():
        word = line.split("#", 1)[0].strip().lower()
        if word:
            words.add(word)
    return frozenset(words)


@dataclass(frozen=True)
class PipelineConfig:
    """Mining knobs; defaults match the desk-scale acceptance setup."""

    stopword_list: frozenset[str] = field(default_factory=load_stopwords)
    nmax: int = 3
    min_frequency: int = 2
    keep_interior_stopwords: bool = True
    entity_gazetteer: frozenset[str] = frozenset()
    case_fold: bool = True

    def __post_init__(self):
        if self.nmax not in (1, 2, 3):
            raise ValueError("nmax must be 1, 2 or 3")
        if self.min_frequency < 1:
            raise ValueError("min_frequency must be >= 1")

    def digest(self) -> str:
        payload = json.dumps(
            {
                "stopwords": sorted(self.stopword_list),
                "nmax": self.nmax,
                "min_frequency": self.min_frequency,
                "keep_interior_stopwords": self.keep_interior_stopwords,
                "gazetteer": sorted(self.entity_gazetteer),
                "case_fold": self.case_fold,
            },
            sort_keys=True,
        )
        return hashlib.sha256(payload.encode("utf-8")).hexdigest()


@dataclass(frozen=True)
class TokenStream:
    """Sentence-segmented tokens; raw_sentences shadows the original casing.

    N-grams never cross sentence boundaries, so later stages only ever
    look inside one sentence at a time.
    """

    sentences: tuple[tuple[str, ...], ...]
    raw_sentences: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        assert len(self.sentences) == len(self.raw_sentences)

    def token_count(self) -> int:
        return sum(len(s) for s in self.sentences)


@dataclass(frozen=True)
class NGramTable:
    """Exact phrase -> count map for one article."""

    article: str
    entries: dict[str, int]

    def total(self) -> int:
        return sum(self.entries.values())


@dataclass
class CandidateTerm:
    """A ranked phrase awaiting (or holding) a curation decision."""

    phrase: str
    n: int
    total_frequency: int
    per_article: dict[str, int]
    status: str = "pending"  # pending|concept|property|synonym|rejected
    linked_element: str | None = None
    decided_at: int | None = None  # seq of the decision that set the status

    def to_record(self) -> dict:
        return {
            "phrase": self.phrase,
            "n": self.n,
            "total_frequency": self.total_frequency,
            "per_article": dict(sorted(self.per_article.items())),
            "status": self.status,
            "linked_element": self.linked_element,
            "decided_at": self.decided_at,
        }

    @classmethod
    def from_record(cls, record: dict) -> "CandidateTerm":
        return cls(
            phrase=record["phrase"],
            n=record["n"],
            total_frequency=record["total_frequency"],
            per_article=dict(record["per_article"]),
            status=record.get("status", "pending"),
            linked_element=record.get("linked_element"),
            decided_at=record.get("decided_at"),
        )


def normalize(text: str, config: PipelineConfig) -> TokenStream:
    """Split into sentences and whitespace tokens, stripping edge punctuation.

    Hyphenated words stay single tokens; case folding is applied to the
    working view while the raw view keeps the original capitalization.
    """
    sentences: list[tuple[str, ...]] = []
    raw_sentences: list[tuple[str, ...]] = []
    for chunk in _SENTENCE_SPLIT_RE.split(text):
        raw_tokens = []
        for raw in chunk.split():
            token = raw.strip(_EDGE_PUNCT)
            if token:
                raw_tokens.append(token)
        if not raw_tokens:
            continue
        raw_sentences.append(tuple(raw_tokens))
        if config.case_fold:
            sentences.append(tuple(t.lower() for t in raw_tokens))
        else:
            sentences.append(tuple(raw_tokens))
    return TokenStream(tuple(sentences), tuple(raw_sentences))


def remove_stopwords(stream: TokenStream, config: PipelineConfig) -> TokenStream:
    """Drop stopword tokens; sentences that empty out are dropped whole."""
    sentences = []
    raws = []
    for sent, raw in zip(stream.sentences, stream.raw_sentences):
        kept = [(t, r) for t, r in zip(sent, raw) if t not in config.stopword_list]
        if kept:
            sentences.append(tuple(t for t, _ in kept))
            raws.append(tuple(r for _, r in kept))
    return TokenStream(tuple(sentences), tuple(raws))


def _gazetteer_index(config: PipelineConfig) -> dict[str, list[tuple[str, ...]]]:
    index: dict[str, list[tuple[str, ...]]] = {}
    for name in config.entity_gazetteer:
        tokens = tuple(name.lower().split())
        if tokens:
            index.setdefault(tokens[0], []).append(tokens)
    for entries in index.values():
        entries.sort(key=len, reverse=True)  # longest match wins
    return index


def remove_entities_and_numerics(stream: TokenStream, config: PipelineConfig) -> TokenStream:
    """Drop numeric expressions, gazetteer name spans, and capitalized runs.

    Capitalization is judged on the raw view, and a token capitalized only
    by its sentence-initial position is kept.
    """
    gazetteer = _gazetteer_index(config)
    sentences = []
    raws = []
    for sent, raw in zip(stream.sentences, stream.raw_sentences):
        n = len(sent)
        drop = [False] * n
        lowered = [t.lower() for t in sent]
        for i in range(n):
            if _NUMERIC_RE.match(sent[i]):
                drop[i] = True
        for i in range(n):
            for entry in gazetteer.get(lowered[i], ()):
                span = len(entry)
                if tuple(lowered[i : i + span]) == entry:
                    for j in range(i, i + span):
                        drop[j] = True
                    break
        for i in range(1, n):
            if raw[i][:1].isupper():
                drop[i] = True
        kept = [(sent[i], raw[i]) for i in range(n) if not drop[i]]
        if kept:
            sentences.append(tuple(t for t, _ in kept))
            raws.append(tuple(r for _, r in kept))
    return TokenStream(tuple(sentences), tuple(raws))


def clean(text: str, config: PipelineConfig) -> TokenStream:
    """Full cleaning pass: normalize, stopwords, entities and numerics.

    With keep_interior_stopwords the stopword pass is deferred to n-gram
    extraction, which then refuses any window starting or ending on a
    stopword; that is what lets trigrams keep an interior one.
    """
    stream = normalize(text, config)
    if not config.keep_interior_stopwords:
        stream = remove_stopwords(stream, config)
    return remove_entities_and_numerics(stream, config)


def extract_ngrams(stream: TokenStream, config: PipelineConfig, article: str = "") -> NGramTable:
    """Count every contiguous window of 1..nmax tokens within each sentence."""
    edge_stopwords = config.stopword_list if config.keep_interior_stopwords else frozenset()
    counts: Counter[str] = Counter()
    for sent in stream.sentences:
        for n in range(1, config.nmax + 1):
            for i in range(len(sent) - n + 1):
                window = sent[i : i + n]
                if window[0] in edge_stopwords or window[-1] in edge_stopwords:
                    continue
                counts[" ".join(window)] += 1
    return NGramTable(article=article, entries=dict(counts))


def mine_article(text: str, config: PipelineConfig, article: str = "") -> NGramTable:
    return extract_ngrams(clean(text, config), config, article=article)


def mine_corpus(corpus: Corpus, config: PipelineConfig) -> list[NGramTable]:
    """Per-article tables, seed first then linked articles by slug."""
    order = [corpus.seed] + sorted(s for s in corpus.articles if s != corpus.seed)
    return [mine_article(corpus.articles[s].text, config, article=s) for s in order]


def rank_candidates(tables: list[NGramTable], config: PipelineConfig) -> list[CandidateTerm]:
    """Merge per-article counts and rank by total frequency.

    Phrases under min_frequency are dropped; ties break by ascending
    phrase so the output is a total order.
    """
    totals: Counter[str] = Counter()
    per_phrase: dict[str, dict[str, int]] = {}
    for table in tables:
        for phrase, count in table.entries.items():
            totals[phrase] += count
            bucket = per_phrase.setdefault(phrase, {})
            bucket[table.article] = bucket.get(table.article, 0) + count
    ranked = sorted(totals.items(), key=lambda kv: (-kv[1], kv[0]))
    return [
        CandidateTerm(
            phrase=phrase,
            n=phrase.count(" ") + 1,
            total_frequency=total,
            per_article=per_phrase[phrase],
        )
        for phrase, total in ranked
        if total >= config.min_frequency
    ]


# --- candidate export format: one JSON record per line ---


def save_candidates(candidates: list[CandidateTerm], path: str | Path, header: dict | None = None):
    lines = []
    if header is not None:
        lines.append(json.dumps(header, ensure_ascii=False, sort_keys=True))
    for cand in candidates:
        lines.append(json.dumps(cand.to_record(), ensure_ascii=False, sort_keys=True))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_candidates(path: str | Path) -> tuple[dict, list[CandidateTerm]]:
    """Returns (header, candidates); header is {} when the file has none."""
    header: dict = {}
    candidates: list[CandidateTerm] = []
    for i, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines()):
        if not line.strip():
            continue
        record = json.loads(line)
        if i == 0 and "phrase" not in record:
            header = record
            continue
        candidates.append(CandidateTerm.from_record(record))
    return header, candidates
