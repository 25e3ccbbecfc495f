"""Curation sessions: a human reviews ranked candidates and promotes them
into ontology elements, with every decision captured in a replayable log.

The log is the state of record. Applying decisions in sequence over the
initial candidate list always reconstructs the exact session state, so a
session survives restarts as one append-only `<id>.log` file plus an
immutable candidate snapshot. Undo never rewrites history: it appends an
`undo` decision and reverses the effect, refusing when another decision
has since built on the element.
"""

from __future__ import annotations

import json
import os
import uuid
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

from .corpus import Corpus, corpus_digest
from .ontology import (
    RELATION_KINDS,
    VALUE_KINDS,
    DuplicateLabelError,
    DuplicatePropertyError,
    Ontology,
    OntologyError,
    PropertyDef,
)
from .seed import seed_wind_ontology
from .textmine import CandidateTerm, PipelineConfig, mine_corpus, rank_candidates

ACTIONS = ("accept_concept", "accept_property", "accept_synonym", "reject", "undo")

# candidate status a decision assigns
_STATUS_BY_ACTION = {
    "accept_concept": "concept",
    "accept_property": "property",
    "accept_synonym": "synonym",
    "reject": "rejected",
}


class CurationError(Exception):
    """Base class for refused decisions."""


class UnknownPhraseError(CurationError):
    pass


class AlreadyDecidedError(CurationError):
    pass


class NotDecidedError(CurationError):
    pass


class DanglingReferenceError(CurationError):
    """Payload references an element that is not in the draft."""


class ElementInUseError(CurationError):
    """Undo refused: later work depends on the element."""


class InvalidDecisionError(CurationError):
    """Malformed action or payload; carries the sequence number when the
    problem is found during replay."""

    def __init__(self, message: str, seq: int | None = None):
        super().__init__(message if seq is None else f"decision {seq}: {message}")
        self.seq = seq


class LogGapError(CurationError):
    pass


def _now() -> str:
    return datetime.now(timezone.utc).isoformat()


@dataclass(frozen=True)
class Decision:
    seq: int
    phrase: str
    action: str
    payload: dict
    at: str

    def to_record(self) -> dict:
        return {
            "seq": self.seq,
            "phrase": self.phrase,
            "action": self.action,
            "payload": self.payload,
            "at": self.at,
        }

    @classmethod
    def from_record(cls, record: dict) -> "Decision":
        try:
            return cls(
                seq=int(record["seq"]),
                phrase=record["phrase"],
                action=record["action"],
                payload=dict(record.get("payload") or {}),
                at=record["at"],
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidDecisionError(f"bad decision record: {exc}") from exc


@dataclass(frozen=True)
class DecisionOutcome:
    seq: int
    status: str
    warnings: tuple[str, ...] = ()


@dataclass
class CurationSession:
    id: str
    corpus_ref: str
    config_digest: str
    candidates: list[CandidateTerm]
    draft: Ontology
    from_seed: bool = False
    decisions: list[Decision] = field(default_factory=list)
    created_at: str = field(default_factory=_now)

    def __post_init__(self):
        self._by_phrase = {c.phrase: c for c in self.candidates}
        if len(self._by_phrase) != len(self.candidates):
            raise ValueError("duplicate phrases in candidate list")

    def candidate(self, phrase: str) -> CandidateTerm:
        try:
            return self._by_phrase[phrase]
        except KeyError:
            raise UnknownPhraseError(f"no candidate {phrase!r}") from None

    def has_candidate(self, phrase: str) -> bool:
        return phrase in self._by_phrase

    @property
    def seq(self) -> int:
        return len(self.decisions)

    def candidates_with_status(self, status: str | None = None) -> list[CandidateTerm]:
        if status is None:
            return list(self.candidates)
        return [c for c in self.candidates if c.status == status]


def open_session(
    corpus: Corpus,
    config: PipelineConfig | None = None,
    *,
    from_seed: bool = False,
    session_id: str | None = None,
) -> CurationSession:
    """Mine the corpus and start a fresh session over the ranked list.
    The draft starts empty, or as a copy of the shipped seed ontology so
    curation extends it."""
    if not corpus.articles:
        raise ValueError("corpus has no articles")
    config = config or PipelineConfig()
    candidates = rank_candidates(mine_corpus(corpus, config), config)
    return CurationSession(
        id=session_id or uuid.uuid4().hex,
        corpus_ref=corpus_digest(corpus),
        config_digest=config.digest(),
        candidates=candidates,
        draft=seed_wind_ontology() if from_seed else Ontology(),
        from_seed=from_seed,
    )


def session_from_candidates(
    candidates: list[CandidateTerm],
    *,
    corpus_ref: str = "",
    config_digest: str = "",
    from_seed: bool = False,
    session_id: str | None = None,
    created_at: str | None = None,
) -> CurationSession:
    """Start a session over an already-mined candidate list (statuses are
    reset to pending; the log is the only source of decisions)."""
    fresh = [
        CandidateTerm(
            phrase=c.phrase,
            n=c.n,
            total_frequency=c.total_frequency,
            per_article=dict(c.per_article),
        )
        for c in candidates
    ]
    session = CurationSession(
        id=session_id or uuid.uuid4().hex,
        corpus_ref=corpus_ref,
        config_digest=config_digest,
        candidates=fresh,
        draft=seed_wind_ontology() if from_seed else Ontology(),
        from_seed=from_seed,
    )
    if created_at is not None:
        session.created_at = created_at
    return session


# --- decision application ---


def decide(
    session: CurationSession, phrase: str, action: str, payload: dict | None = None
) -> DecisionOutcome:
    """Validate and apply one decision, then append it to the log."""
    decision = Decision(
        seq=session.seq + 1,
        phrase=phrase,
        action=action,
        payload=dict(payload or {}),
        at=_now(),
    )
    outcome = _apply(session, decision)
    session.decisions.append(decision)
    return outcome


def undo(session: CurationSession, phrase: str) -> DecisionOutcome:
    """Return a decided phrase to pending, reversing its draft effect."""
    return decide(session, phrase, "undo")


def _apply(session: CurationSession, decision: Decision) -> DecisionOutcome:
    """Apply one decision to the session state. Raises before any state is
    touched when the decision is invalid, so a failed call leaves the
    session unchanged."""
    if decision.action not in ACTIONS:
        raise InvalidDecisionError(f"unknown action {decision.action!r}")
    candidate = session.candidate(decision.phrase)
    if decision.action == "undo":
        return _apply_undo(session, candidate, decision)
    if candidate.status != "pending":
        raise AlreadyDecidedError(
            f"{decision.phrase!r} already decided ({candidate.status})"
        )
    handler = {
        "accept_concept": _apply_accept_concept,
        "accept_property": _apply_accept_property,
        "accept_synonym": _apply_accept_synonym,
        "reject": _apply_reject,
    }[decision.action]
    linked, warnings = handler(session, candidate, decision)
    candidate.status = _STATUS_BY_ACTION[decision.action]
    candidate.linked_element = linked
    candidate.decided_at = decision.seq
    return DecisionOutcome(decision.seq, candidate.status, tuple(warnings))


def _apply_accept_concept(session, candidate, decision):
    payload = decision.payload
    label = payload.get("label") or candidate.phrase
    related_to = payload.get("related_to")
    kind = payload.get("relation_kind", "is_a")
    if related_to is not None:
        if kind not in RELATION_KINDS:
            raise InvalidDecisionError(f"unknown relation kind {kind!r}", decision.seq)
        if related_to not in session.draft.concepts:
            raise DanglingReferenceError(f"no concept {related_to!r} in draft")
    try:
        cid = session.draft.add_concept(label)
    except DuplicateLabelError as exc:
        raise AlreadyDecidedError(str(exc)) from exc
    except ValueError as exc:
        raise InvalidDecisionError(str(exc), decision.seq) from exc
    if related_to is not None:
        try:
            # a part-of edge points from the whole to the new part
            if kind == "has":
                session.draft.add_relation("has", related_to, cid)
            else:
                session.draft.add_relation(kind, cid, related_to)
        except OntologyError:
            session.draft.remove_concept(cid)
            raise
    warnings = []
    for match in session.draft.query_by_term(label):
        if match.kind == "concept" and match.concept_id != cid:
            warnings.append(
                f"label {label!r} also appears on concept {match.concept_id}"
            )
    return cid, warnings


def _apply_accept_property(session, candidate, decision):
    payload = decision.payload
    owner = payload.get("owner")
    if not owner:
        raise InvalidDecisionError("accept_property payload needs an owner", decision.seq)
    if owner not in session.draft.concepts:
        raise DanglingReferenceError(f"no concept {owner!r} in draft")
    name = payload.get("name") or candidate.phrase
    value_kind = payload.get("value_kind", "text")
    if value_kind not in VALUE_KINDS:
        raise InvalidDecisionError(f"unknown value kind {value_kind!r}", decision.seq)
    try:
        session.draft.add_property(owner, PropertyDef(name=name, value_kind=value_kind))
    except DuplicatePropertyError as exc:
        raise AlreadyDecidedError(str(exc)) from exc
    return f"{owner}#{name}", []


def _apply_accept_synonym(session, candidate, decision):
    payload = decision.payload
    target = payload.get("target")
    if not target:
        raise InvalidDecisionError("accept_synonym payload needs a target", decision.seq)
    display = payload.get("display") or candidate.phrase
    concept_id, _, property_name = target.partition("#")
    concept = session.draft.concepts.get(concept_id)
    if concept is None:
        raise DanglingReferenceError(f"no concept {concept_id!r} in draft")
    if property_name:
        if concept.property_named(property_name) is None:
            raise DanglingReferenceError(
                f"no property {property_name!r} on {concept_id!r}"
            )
        session.draft.add_synonym(concept_id, display, property_name)
    else:
        session.draft.add_synonym(concept_id, display)
    warnings = []
    other = session.draft.concept_by_label(display)
    if other is not None and other.id != concept_id:
        warnings.append(f"synonym {display!r} is also the label of concept {other.id}")
    return target, warnings


def _apply_reject(session, candidate, decision):
    return None, []


def _apply_undo(session, candidate, decision) -> DecisionOutcome:
    if candidate.status == "pending":
        raise NotDecidedError(f"{candidate.phrase!r} is pending; nothing to undo")
    original = session.decisions[candidate.decided_at - 1]
    reverser = {
        "accept_concept": _undo_accept_concept,
        "accept_property": _undo_accept_property,
        "accept_synonym": _undo_accept_synonym,
        "reject": lambda s, c, d: None,
    }[original.action]
    reverser(session, candidate, original)
    candidate.status = "pending"
    candidate.linked_element = None
    candidate.decided_at = None
    return DecisionOutcome(decision.seq, "pending")


def _undo_accept_concept(session, candidate, original):
    cid = candidate.linked_element
    concept = session.draft.concepts.get(cid)
    if concept is None:
        raise InvalidDecisionError(f"draft lost concept {cid!r}")
    if concept.properties or concept.synonyms:
        raise ElementInUseError(
            f"concept {cid!r} has gained properties or synonyms; undo refused"
        )
    own_edges = set()
    related_to = original.payload.get("related_to")
    if related_to is not None:
        kind = original.payload.get("relation_kind", "is_a")
        if kind == "has":
            own_edges.add((kind, related_to, cid))
        else:
            own_edges.add((kind, cid, related_to))
    foreign = [
        r
        for r in session.draft.incident_relations(cid)
        if (r.kind, r.source, r.target) not in own_edges
    ]
    if foreign:
        first = foreign[0]
        raise ElementInUseError(
            f"concept {cid!r} is used by {first.kind}({first.source}, {first.target}); undo refused"
        )
    for kind, source, target in own_edges:
        session.draft.remove_relation(kind, source, target)
    session.draft.remove_concept(cid)


def _undo_accept_property(session, candidate, original):
    concept_id, _, name = candidate.linked_element.partition("#")
    concept = session.draft.concepts.get(concept_id)
    prop = concept.property_named(name) if concept else None
    if prop is None:
        raise InvalidDecisionError(f"draft lost property {candidate.linked_element!r}")
    if prop.synonyms:
        raise ElementInUseError(
            f"property {candidate.linked_element!r} has gained synonyms; undo refused"
        )
    session.draft.remove_property(concept_id, name)


def _undo_accept_synonym(session, candidate, original):
    target = candidate.linked_element
    display = original.payload.get("display") or candidate.phrase
    concept_id, _, property_name = target.partition("#")
    session.draft.remove_synonym(concept_id, display, property_name or None)


# --- replay ---


def replay(
    log: list[Decision],
    candidates: list[CandidateTerm],
    *,
    from_seed: bool = False,
    session_id: str | None = None,
    corpus_ref: str = "",
    config_digest: str = "",
    created_at: str | None = None,
) -> CurationSession:
    """Rebuild a session by applying a gapless log over the initial
    candidates. The result equals the live session that produced the log."""
    session = session_from_candidates(
        candidates,
        corpus_ref=corpus_ref,
        config_digest=config_digest,
        from_seed=from_seed,
        session_id=session_id,
        created_at=created_at,
    )
    for index, decision in enumerate(log):
        if decision.seq != index + 1:
            raise LogGapError(f"expected seq {index + 1}, log has {decision.seq}")
        try:
            _apply(session, decision)
        except (CurationError, OntologyError) as exc:
            if isinstance(exc, InvalidDecisionError) and exc.seq is not None:
                raise
            raise InvalidDecisionError(str(exc), seq=decision.seq) from exc
        session.decisions.append(decision)
    return session


def sessions_equal(a: CurationSession, b: CurationSession) -> bool:
    """State equality: candidate statuses, log, and draft structure."""
    if [c.to_record() for c in a.candidates] != [c.to_record() for c in b.candidates]:
        return False
    if [d.to_record() for d in a.decisions] != [d.to_record() for d in b.decisions]:
        return False
    return a.draft.structurally_equal(b.draft)


# --- persistence ---


class SessionStore:
    """Files under a data directory: `<id>.log` (append-only decisions,
    fsynced per append) and `<id>.candidates.jsonl` (the immutable
    snapshot with a session header line)."""

    def __init__(self, data_dir: str | Path):
        self.root = Path(data_dir) / "sessions"
        self.root.mkdir(parents=True, exist_ok=True)

    def log_path(self, session_id: str) -> Path:
        return self.root / f"{session_id}.log"

    def snapshot_path(self, session_id: str) -> Path:
        return self.root / f"{session_id}.candidates.jsonl"

    def list_ids(self) -> list[str]:
        return sorted(p.name[: -len(".log")] for p in self.root.glob("*.log"))

    def create(self, session: CurationSession) -> None:
        header = {
            "session": session.id,
            "corpus_ref": session.corpus_ref,
            "config_digest": session.config_digest,
            "from_seed": session.from_seed,
            "created_at": session.created_at,
        }
        lines = [json.dumps(header, ensure_ascii=False, sort_keys=True)]
        for candidate in session.candidates:
            record = candidate.to_record()
            # the snapshot stores the initial review state, not the outcome
            record.update(status="pending", linked_element=None, decided_at=None)
            lines.append(json.dumps(record, ensure_ascii=False, sort_keys=True))
        self.snapshot_path(session.id).write_text("\n".join(lines) + "\n", encoding="utf-8")
        path = self.log_path(session.id)
        if not path.exists():
            path.touch()
        for decision in session.decisions:
            self.append(session.id, decision)

    def append(self, session_id: str, decision: Decision) -> None:
        line = json.dumps(decision.to_record(), ensure_ascii=False, sort_keys=True)
        with open(self.log_path(session_id), "a", encoding="utf-8") as handle:
            handle.write(line + "\n")
            handle.flush()
            os.fsync(handle.fileno())

    def load(self, session_id: str) -> CurationSession:
        snapshot = self.snapshot_path(session_id)
        if not snapshot.exists():
            raise FileNotFoundError(f"no snapshot for session {session_id!r}")
        lines = snapshot.read_text(encoding="utf-8").splitlines()
        if not lines:
            raise InvalidDecisionError(f"empty snapshot for session {session_id!r}")
        header = json.loads(lines[0])
        candidates = [CandidateTerm.from_record(json.loads(line)) for line in lines[1:] if line]
        log = self.read_log(session_id)
        return replay(
            log,
            candidates,
            from_seed=bool(header.get("from_seed")),
            session_id=header.get("session", session_id),
            corpus_ref=header.get("corpus_ref", ""),
            config_digest=header.get("config_digest", ""),
            created_at=header.get("created_at"),
        )

    def read_log(self, session_id: str) -> list[Decision]:
        path = self.log_path(session_id)
        if not path.exists():
            return []
        decisions = []
        for line in path.read_text(encoding="utf-8").splitlines():
            if line.strip():
                decisions.append(Decision.from_record(json.loads(line)))
        return decisions
