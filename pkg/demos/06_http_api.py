"""
Driving the curation service over HTTP
======================================

The same session workflow is exposed as a small JSON API (this is what
the browser UI talks to). The demo exercises it in-process with a test
client; `python3 -m ontoforge.cli serve` runs the identical app behind
uvicorn.
"""

import tempfile
from pathlib import Path

from fastapi.testclient import TestClient

from ontoforge.service import create_app

REPO = Path(__file__).resolve().parent.parent

scratch = tempfile.TemporaryDirectory()
app = create_app(data_dir=scratch.name, corpus_path=REPO / "fixtures" / "corpus.jsonl")
client = TestClient(app)

print("healthz:", client.get("/healthz").json())

# a session mines the corpus on open; from_seed starts the draft at the
# shipped wind ontology instead of empty
opened = client.post("/sessions", json={"from_seed": True}).json()
sid = opened["id"]
print(f"opened session {sid[:8]}: {opened['candidates']} candidates, from_seed={opened['from_seed']}")

page = client.get(f"/sessions/{sid}/candidates", params={"limit": 3}).json()
print(f"first page of {page['total']} pending:")
for item in page["items"]:
    print(f"  {item['total_frequency']:4d}  {item['phrase']}")

# decisions are plain POSTs; the server appends each to the session log
decisions = [
    {"phrase": "offshore wind", "action": "accept_concept",
     "payload": {"related_to": "wind_power", "relation_kind": "is_a"}},
    {"phrase": "blades", "action": "reject"},
]
for body in decisions:
    reply = client.post(f"/sessions/{sid}/decisions", json=body).json()
    print(f"seq {reply['seq']}: {reply['phrase']} -> {reply['status']}")

# a wrong call returns a machine-readable error, not a stack trace
bad = client.post(
    f"/sessions/{sid}/decisions",
    json={"phrase": "no such phrase", "action": "reject"},
)
print(f"unknown phrase -> HTTP {bad.status_code}, code {bad.json()['code']!r}")

# undo through the API follows the same rules as the library
reply = client.post(f"/sessions/{sid}/undo", json={"phrase": "blades"}).json()
print(f"seq {reply['seq']}: blades undone -> {reply['status']}")

# the draft exports as OWL at any point
turtle = client.get(f"/sessions/{sid}/export.owl").text
classes = sum(1 for line in turtle.splitlines() if line.endswith(" a owl:Class ."))
print(f"export.owl: {classes} classes, offshore_wind present: {':offshore_wind a owl:Class .' in turtle}")

scratch.cleanup()
