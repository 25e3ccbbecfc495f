"""HTTP API: endpoint contracts, the closed error-code set, durable
logs, and restart replay."""

import pytest
from fastapi.testclient import TestClient

from ontoforge.service import create_app

ERROR_CODES = {
    "bad-payload",
    "unknown-session",
    "unknown-phrase",
    "already-decided",
    "not-decided",
    "element-in-use",
    "dangling-reference",
    "is-a-cycle",
    "duplicate-label",
    "duplicate-property",
    "duplicate-relation",
    "no-corpus",
}


@pytest.fixture()
def client(tmp_path, fixture_corpus_path):
    app = create_app(data_dir=tmp_path, corpus_path=fixture_corpus_path)
    with TestClient(app) as c:
        yield c


def _open(client, **body):
    resp = client.post("/sessions", json=body)
    assert resp.status_code == 201, resp.text
    return resp.json()["id"]


def _decide(client, sid, phrase, action, payload=None, expect=200):
    resp = client.post(
        f"/sessions/{sid}/decisions",
        json={"phrase": phrase, "action": action, "payload": payload or {}},
    )
    assert resp.status_code == expect, resp.text
    return resp.json()


def _assert_error(resp, status, code):
    assert resp.status_code == status, resp.text
    body = resp.json()
    assert body["code"] == code
    assert code in ERROR_CODES
    assert set(body) == {"code", "message", "details"}


class TestBasics:
    def test_healthz(self, client):
        resp = client.get("/healthz")
        assert resp.status_code == 200
        assert resp.json()["status"] == "ok"

    def test_seed_export(self, client):
        resp = client.get("/seed.owl")
        assert resp.status_code == 200
        assert resp.headers["content-type"].startswith("text/turtle")
        assert resp.text.count("a owl:Class .") == 47

    def test_open_session_defaults(self, client):
        resp = client.post("/sessions", json={})
        assert resp.status_code == 201
        body = resp.json()
        assert body["seq"] == 0
        assert body["candidates"] > 300
        assert body["from_seed"] is False
        assert body["corpus_ref"]

    def test_open_session_with_overrides(self, client):
        resp = client.post("/sessions", json={"min_frequency": 5, "nmax": 1})
        assert resp.status_code == 201
        assert 0 < resp.json()["candidates"] < 200

    def test_open_session_validation(self, client):
        _assert_error(client.post("/sessions", json={"nmax": 9}), 400, "bad-payload")
        _assert_error(client.post("/sessions", json={"min_frequency": 0}), 400, "bad-payload")

    def test_no_corpus_server_cannot_open(self, tmp_path):
        app = create_app(data_dir=tmp_path)
        with TestClient(app) as c:
            _assert_error(c.post("/sessions", json={}), 400, "no-corpus")


class TestCandidates:
    def test_pagination(self, client):
        sid = _open(client)
        first = client.get(f"/sessions/{sid}/candidates", params={"limit": 5}).json()
        assert len(first["items"]) == 5
        assert first["offset"] == 0
        assert first["total"] > 300
        second = client.get(
            f"/sessions/{sid}/candidates", params={"limit": 5, "offset": 5}
        ).json()
        assert [c["phrase"] for c in second["items"]] != [
            c["phrase"] for c in first["items"]
        ]

    def test_ranked_order(self, client):
        sid = _open(client)
        items = client.get(f"/sessions/{sid}/candidates", params={"limit": 3}).json()["items"]
        assert [c["phrase"] for c in items] == ["wind", "power", "energy"]

    def test_status_filter(self, client):
        sid = _open(client)
        _decide(client, sid, "wind", "reject")
        rejected = client.get(
            f"/sessions/{sid}/candidates", params={"status": "rejected"}
        ).json()
        assert [c["phrase"] for c in rejected["items"]] == ["wind"]
        assert rejected["total"] == 1

    def test_bad_query_params(self, client):
        sid = _open(client)
        _assert_error(
            client.get(f"/sessions/{sid}/candidates", params={"status": "bogus"}),
            400,
            "bad-payload",
        )
        _assert_error(
            client.get(f"/sessions/{sid}/candidates", params={"limit": 0}),
            400,
            "bad-payload",
        )

    def test_unknown_session(self, client):
        _assert_error(client.get("/sessions/ghost/candidates"), 404, "unknown-session")


class TestDecisions:
    def test_accept_and_export(self, client):
        sid = _open(client)
        out = _decide(client, sid, "wind turbine", "accept_concept")
        assert out == {"seq": 1, "phrase": "wind turbine", "status": "concept", "warnings": []}
        onto = client.get(f"/sessions/{sid}/ontology").json()
        assert [c["id"] for c in onto["concepts"]] == ["wind_turbine"]
        assert onto["validation"]["errors"] == []
        export = client.get(f"/sessions/{sid}/export.owl")
        assert 'rdfs:label "wind turbine"' in export.text

    def test_xml_export(self, client):
        sid = _open(client)
        _decide(client, sid, "wind turbine", "accept_concept")
        resp = client.get(f"/sessions/{sid}/export.owl", params={"syntax": "xml"})
        assert resp.headers["content-type"].startswith("application/rdf+xml")
        assert "<rdf:RDF" in resp.text

    def test_bad_export_syntax(self, client):
        sid = _open(client)
        _assert_error(
            client.get(f"/sessions/{sid}/export.owl", params={"syntax": "n3"}),
            400,
            "bad-payload",
        )

    def test_decision_error_codes(self, client):
        sid = _open(client)
        resp = client.post(
            f"/sessions/{sid}/decisions",
            json={"phrase": "no such phrase", "action": "reject"},
        )
        _assert_error(resp, 404, "unknown-phrase")

        _decide(client, sid, "wind", "reject")
        resp = client.post(
            f"/sessions/{sid}/decisions", json={"phrase": "wind", "action": "reject"}
        )
        _assert_error(resp, 409, "already-decided")

        resp = client.post(
            f"/sessions/{sid}/decisions",
            json={
                "phrase": "rotor",
                "action": "accept_synonym",
                "payload": {"target": "ghost"},
            },
        )
        _assert_error(resp, 422, "dangling-reference")

        resp = client.post(
            f"/sessions/{sid}/decisions", json={"phrase": "rotor", "action": "bogus"}
        )
        _assert_error(resp, 400, "bad-payload")

    def test_body_validation_is_400(self, client):
        sid = _open(client)
        resp = client.post(f"/sessions/{sid}/decisions", json={"phrase": "wind"})
        _assert_error(resp, 400, "bad-payload")

    def test_undo_flow(self, client):
        sid = _open(client)
        _decide(client, sid, "wind turbine", "accept_concept")
        resp = client.post(f"/sessions/{sid}/undo", json={"phrase": "wind turbine"})
        assert resp.status_code == 200
        assert resp.json()["status"] == "pending"
        onto = client.get(f"/sessions/{sid}/ontology").json()
        assert onto["concepts"] == []

    def test_undo_error_codes(self, client):
        sid = _open(client)
        resp = client.post(f"/sessions/{sid}/undo", json={"phrase": "wind"})
        _assert_error(resp, 409, "not-decided")

        _decide(client, sid, "wind turbine", "accept_concept")
        _decide(client, sid, "wtg", "accept_synonym", {"target": "wind_turbine"})
        resp = client.post(f"/sessions/{sid}/undo", json={"phrase": "wind turbine"})
        _assert_error(resp, 409, "element-in-use")

    def test_duplicate_label_code(self, client):
        sid = _open(client)
        _decide(client, sid, "wind turbine", "accept_concept")
        resp = client.post(
            f"/sessions/{sid}/decisions",
            json={
                "phrase": "turbine",
                "action": "accept_concept",
                "payload": {"label": "wind turbine"},
            },
        )
        _assert_error(resp, 409, "already-decided")


class TestPersistence:
    def test_restart_replays_sessions(self, tmp_path, fixture_corpus_path):
        app = create_app(data_dir=tmp_path, corpus_path=fixture_corpus_path)
        with TestClient(app) as client:
            sid = _open(client, from_seed=True)
            _decide(client, sid, "offshore", "accept_concept")
            _decide(client, sid, "wtg", "accept_synonym", {"target": "wind_turbine"})
            before = client.get(f"/sessions/{sid}/ontology").json()

        # a brand-new app over the same data directory replays the log
        reborn = create_app(data_dir=tmp_path, corpus_path=fixture_corpus_path)
        with TestClient(reborn) as client:
            after = client.get(f"/sessions/{sid}/ontology").json()
            assert after == before
            page = client.get(
                f"/sessions/{sid}/candidates", params={"status": "concept"}
            ).json()
            assert [c["phrase"] for c in page["items"]] == ["offshore"]
            assert page["seq"] == 2

    def test_decisions_continue_after_restart(self, tmp_path, fixture_corpus_path):
        app = create_app(data_dir=tmp_path, corpus_path=fixture_corpus_path)
        with TestClient(app) as client:
            sid = _open(client)
            _decide(client, sid, "wind turbine", "accept_concept")

        reborn = create_app(data_dir=tmp_path, corpus_path=fixture_corpus_path)
        with TestClient(reborn) as client:
            out = _decide(client, sid, "rotor", "accept_concept")
            assert out["seq"] == 2
