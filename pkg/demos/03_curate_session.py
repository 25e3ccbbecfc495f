"""
Curating candidates into a draft ontology
=========================================

A session pairs the ranked candidate list with a draft ontology and an
append-only decision log. Every change goes through `decide`, so the log
alone can rebuild the exact session state.
"""

import tempfile
from pathlib import Path

from ontoforge import AcquisitionConfig, build_corpus
from ontoforge.curation import (
    ElementInUseError,
    SessionStore,
    decide,
    open_session,
    sessions_equal,
    undo,
)

REPO = Path(__file__).resolve().parent.parent

config = AcquisitionConfig(source="fixture", fixture_dir=REPO / "fixtures" / "wiki")
corpus = build_corpus("wind_power", config)
session = open_session(corpus)

print(f"session {session.id[:8]} over {len(session.candidates)} candidates")
print("top of the review queue:")
for candidate in session.candidates[:5]:
    print(f"  {candidate.total_frequency:4d}  {candidate.phrase}")

# each decision names a pending phrase and says what it becomes
decide(session, "wind turbine", "accept_concept")
decide(
    session,
    "rotor",
    "accept_concept",
    {"related_to": "wind_turbine", "relation_kind": "has"},
)
decide(
    session,
    "rated power",
    "accept_property",
    {"owner": "wind_turbine", "value_kind": "quantity"},
)
decide(session, "wtg", "accept_synonym", {"target": "wind_turbine", "display": "WTG"})
decide(session, "blades", "reject")

draft = session.draft
print(f"\nafter {session.seq} decisions the draft holds:")
for concept in draft.concepts.values():
    props = ", ".join(p.name for p in concept.properties) or "-"
    syns = ", ".join(concept.synonyms) or "-"
    print(f"  concept {concept.id}: properties [{props}], synonyms [{syns}]")
for relation in draft.relations:
    print(f"  relation {relation.kind}({relation.source}, {relation.target})")

# undo refuses while other elements still hang off the concept
try:
    undo(session, "wind turbine")
except ElementInUseError as refusal:
    print(f"\nundo 'wind turbine' refused: {refusal}")

# the rotor only carries the edge its own decision created, so it can go
outcome = undo(session, "rotor")
print(f"undo 'rotor' ok: status back to {outcome.status!r}, draft has {len(draft.relations)} relations")

# the log is the session: replaying it reproduces every detail
with tempfile.TemporaryDirectory() as scratch:
    store = SessionStore(scratch)
    store.create(session)
    rebuilt = store.load(session.id)
    print(f"\nreplayed {len(rebuilt.decisions)} log entries from disk")
    print(f"rebuilt session equals the live one: {sessions_equal(session, rebuilt)}")
