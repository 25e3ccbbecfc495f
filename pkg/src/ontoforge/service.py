"""HTTP API over curation sessions, plus static hosting for the review UI.

The API adds no semantics of its own: every handler calls the same
library functions a script would, and every mutation is appended to the
session's on-disk log before the response is sent, so a restarted server
replays itself back to the exact same state.

Error responses share one shape: {"code", "message", "details"} with
code drawn from a documented closed set (see docs/api.md).
"""

from __future__ import annotations

import os
import threading
from pathlib import Path

from fastapi import FastAPI, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field

from . import curation, owlio
from .corpus import Corpus, load_fixture_corpus
from .curation import (
    AlreadyDecidedError,
    CurationSession,
    DanglingReferenceError,
    ElementInUseError,
    InvalidDecisionError,
    NotDecidedError,
    SessionStore,
    UnknownPhraseError,
)
from .ontology import (
    DuplicateLabelError,
    DuplicatePropertyError,
    DuplicateRelationError,
    IsACycleError,
    Ontology,
    UnknownConceptError,
    UnknownEndpointError,
)
from .seed import seed_wind_ontology
from .textmine import PipelineConfig

DEFAULT_DATA_DIR = "data"
CANDIDATE_STATUSES = ("pending", "concept", "property", "synonym", "rejected")


class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str, details: dict | None = None):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message
        self.details = details or {}


_ERROR_MAP: list[tuple[type, int, str]] = [
    (UnknownPhraseError, 404, "unknown-phrase"),
    (AlreadyDecidedError, 409, "already-decided"),
    (NotDecidedError, 409, "not-decided"),
    (ElementInUseError, 409, "element-in-use"),
    (DanglingReferenceError, 422, "dangling-reference"),
    (IsACycleError, 422, "is-a-cycle"),
    (DuplicateLabelError, 409, "duplicate-label"),
    (DuplicatePropertyError, 409, "duplicate-property"),
    (DuplicateRelationError, 409, "duplicate-relation"),
    (UnknownConceptError, 422, "dangling-reference"),
    (UnknownEndpointError, 422, "dangling-reference"),
    (InvalidDecisionError, 400, "bad-payload"),
]


def _to_api_error(exc: Exception) -> ApiError:
    for klass, status, code in _ERROR_MAP:
        if isinstance(exc, klass):
            return ApiError(status, code, str(exc))
    raise exc


class SessionOpenRequest(BaseModel):
    from_seed: bool = False
    min_frequency: int | None = Field(default=None, ge=1)
    nmax: int | None = Field(default=None, ge=1, le=3)
    keep_interior_stopwords: bool | None = None


class DecisionRequest(BaseModel):
    phrase: str
    action: str
    payload: dict = Field(default_factory=dict)


class UndoRequest(BaseModel):
    phrase: str


class ServiceState:
    """Sessions live in memory behind per-session locks; the store keeps
    their durable logs. A corpus is required only for opening sessions."""

    def __init__(self, data_dir: str | Path, corpus: Corpus | None = None):
        self.store = SessionStore(data_dir)
        self.corpus = corpus
        self.sessions: dict[str, CurationSession] = {}
        self.locks: dict[str, threading.Lock] = {}
        self._registry_lock = threading.Lock()

    def reload(self) -> int:
        count = 0
        for session_id in self.store.list_ids():
            try:
                session = self.store.load(session_id)
            except FileNotFoundError:
                continue  # log without snapshot; nothing to rebuild from
            self._register(session)
            count += 1
        return count

    def _register(self, session: CurationSession) -> None:
        with self._registry_lock:
            self.sessions[session.id] = session
            self.locks[session.id] = threading.Lock()

    def open_session(self, request: SessionOpenRequest) -> CurationSession:
        if self.corpus is None:
            raise ApiError(400, "no-corpus", "server was started without a corpus")
        overrides = {}
        if request.min_frequency is not None:
            overrides["min_frequency"] = request.min_frequency
        if request.nmax is not None:
            overrides["nmax"] = request.nmax
        if request.keep_interior_stopwords is not None:
            overrides["keep_interior_stopwords"] = request.keep_interior_stopwords
        config = PipelineConfig(**overrides)
        session = curation.open_session(self.corpus, config, from_seed=request.from_seed)
        self.store.create(session)
        self._register(session)
        return session

    def get(self, session_id: str) -> CurationSession:
        session = self.sessions.get(session_id)
        if session is None:
            raise ApiError(404, "unknown-session", f"no session {session_id!r}")
        return session

    def lock(self, session_id: str) -> threading.Lock:
        return self.locks[session_id]


def _candidate_json(candidate) -> dict:
    return candidate.to_record()


def _ontology_json(onto: Ontology) -> dict:
    report = onto.validate()
    return {
        "base_iri": onto.base_iri,
        "version": onto.version,
        "root": onto.root,
        "concepts": [
            {
                "id": cid,
                "label": concept.label,
                "synonyms": list(concept.synonyms),
                "properties": [
                    {
                        "name": prop.name,
                        "value_kind": prop.value_kind,
                        "synonyms": list(prop.synonyms),
                    }
                    for prop in concept.properties
                ],
            }
            for cid, concept in sorted(onto.concepts.items())
        ],
        "relations": [
            {"kind": r.kind, "source": r.source, "target": r.target}
            for r in sorted(onto.relations, key=lambda r: (r.kind, r.source, r.target))
        ],
        "validation": {"errors": report.errors, "warnings": report.warnings},
    }


def create_app(
    data_dir: str | Path | None = None,
    corpus_path: str | Path | None = None,
    ui_dir: str | Path | None = None,
) -> FastAPI:
    data_dir = Path(data_dir or os.environ.get("ONTOFORGE_DATA_DIR") or DEFAULT_DATA_DIR)
    corpus = load_fixture_corpus(corpus_path) if corpus_path else None
    state = ServiceState(data_dir, corpus)
    state.reload()

    app = FastAPI(title="ontoforge", version="0.1.0", openapi_url="/openapi.json")
    app.state.service = state

    @app.exception_handler(ApiError)
    async def handle_api_error(request: Request, exc: ApiError):
        return JSONResponse(
            status_code=exc.status,
            content={"code": exc.code, "message": exc.message, "details": exc.details},
        )

    @app.exception_handler(RequestValidationError)
    async def handle_validation_error(request: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=400,
            content={
                "code": "bad-payload",
                "message": "request body failed validation",
                "details": {"errors": exc.errors()},
            },
        )

    @app.get("/healthz")
    def healthz():
        return {"status": "ok", "sessions": len(state.sessions)}

    @app.get("/seed.owl")
    def seed_owl():
        doc = owlio.to_owl(seed_wind_ontology())
        return Response(doc.text, media_type="text/turtle; charset=utf-8")

    @app.post("/sessions", status_code=201)
    def open_session(body: SessionOpenRequest):
        session = state.open_session(body)
        return {
            "id": session.id,
            "seq": session.seq,
            "candidates": len(session.candidates),
            "from_seed": session.from_seed,
            "corpus_ref": session.corpus_ref,
        }

    @app.get("/sessions/{session_id}/candidates")
    def list_candidates(
        session_id: str,
        status: str | None = None,
        offset: int = 0,
        limit: int = 50,
    ):
        if status is not None and status not in CANDIDATE_STATUSES:
            raise ApiError(
                400,
                "bad-payload",
                f"status must be one of {', '.join(CANDIDATE_STATUSES)}",
            )
        if offset < 0 or limit < 1 or limit > 500:
            raise ApiError(400, "bad-payload", "offset must be >= 0, limit in 1..500")
        session = state.get(session_id)
        with state.lock(session_id):
            rows = session.candidates_with_status(status)
            page = rows[offset : offset + limit]
            return {
                "total": len(rows),
                "offset": offset,
                "limit": limit,
                "seq": session.seq,
                "items": [_candidate_json(c) for c in page],
            }

    @app.post("/sessions/{session_id}/decisions")
    def post_decision(session_id: str, body: DecisionRequest):
        session = state.get(session_id)
        with state.lock(session_id):
            try:
                outcome = curation.decide(session, body.phrase, body.action, body.payload)
            except Exception as exc:  # noqa: BLE001 - translated to API codes
                raise _to_api_error(exc) from exc
            state.store.append(session.id, session.decisions[-1])
        return {
            "seq": outcome.seq,
            "phrase": body.phrase,
            "status": outcome.status,
            "warnings": list(outcome.warnings),
        }

    @app.post("/sessions/{session_id}/undo")
    def post_undo(session_id: str, body: UndoRequest):
        session = state.get(session_id)
        with state.lock(session_id):
            try:
                outcome = curation.undo(session, body.phrase)
            except Exception as exc:  # noqa: BLE001 - translated to API codes
                raise _to_api_error(exc) from exc
            state.store.append(session.id, session.decisions[-1])
        return {"seq": outcome.seq, "phrase": body.phrase, "status": outcome.status}

    @app.get("/sessions/{session_id}/ontology")
    def get_ontology(session_id: str):
        session = state.get(session_id)
        with state.lock(session_id):
            return _ontology_json(session.draft)

    @app.get("/sessions/{session_id}/export.owl")
    def export_owl(session_id: str, syntax: str = "turtle"):
        if syntax not in ("turtle", "xml"):
            raise ApiError(400, "bad-payload", "syntax must be turtle or xml")
        session = state.get(session_id)
        with state.lock(session_id):
            doc = owlio.to_owl(session.draft, syntax=syntax)
        media = "text/turtle" if syntax == "turtle" else "application/rdf+xml"
        return Response(doc.text, media_type=f"{media}; charset=utf-8")

    ui = Path(ui_dir) if ui_dir else None
    if ui and ui.is_dir():
        app.mount("/", StaticFiles(directory=ui, html=True), name="ui")

    return app
