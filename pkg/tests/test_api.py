import json

import pytest
from fastapi.testclient import TestClient

from backend.core import config
from backend.main import app
from dualis.calculus import builtin_calculus
from dualis.models import dump_calculus


@pytest.fixture
def client(tmp_path, monkeypatch):
    monkeypatch.setattr(config, "CALCULI_DIR", tmp_path)
    config.calculus_registry.clear()
    with TestClient(app) as c:
        yield c
    config.calculus_registry.clear()


def _document(name="MyLK"):
    data = json.loads(dump_calculus(builtin_calculus("LK")))
    data["name"] = name
    return data


class TestMisc:
    def test_root(self, client):
        body = client.get("/").json()
        assert body["status"] == "online"
        assert body["service"] == "Dualis"

    def test_health(self, client):
        assert client.get("/api/health").json() == {"status": "healthy", "builtin_calculi": 5, "user_calculi": 0}


class TestCalculi:
    def test_list_builtins(self, client):
        listed = client.get("/api/calculi").json()
        assert len(listed) == 5
        assert listed[0]["name"] == "LK"
        assert all(entry["builtin"] for entry in listed)

    def test_rules(self, client):
        body = client.get("/api/calculi/LJ/rules").json()
        assert body["bounds"] == "succedent ≤ 1"
        assert "axiom: A ⊢ A" in body["rules"]

    def test_dual(self, client):
        body = client.get("/api/calculi/LJ/dual").json()
        assert body["antecedent_bound"] == 1
        assert body["succedent_bound"] is None

    def test_unknown(self, client):
        assert client.get("/api/calculi/S4").status_code == 404

    def test_register_use_and_delete(self, client, tmp_path):
        response = client.post("/api/calculi", json=_document())
        assert response.status_code == 200
        assert (tmp_path / "MyLK.json").exists()
        assert len(client.get("/api/calculi").json()) == 6

        proved = client.post("/api/prove", json={"sequent": "p |- p", "calculus": "MyLK"}).json()
        assert proved["verdict"] == "proved"
        assert proved["calculus"] == "MyLK"

        assert client.delete("/api/calculi/MyLK").status_code == 200
        assert not (tmp_path / "MyLK.json").exists()
        assert client.get("/api/calculi/MyLK").status_code == 404

    def test_stored_calculi_loaded_on_startup(self, tmp_path, monkeypatch):
        monkeypatch.setattr(config, "CALCULI_DIR", tmp_path)
        config.calculus_registry.clear()
        (tmp_path / "Mine.json").write_text(json.dumps(_document("Mine")), encoding="utf-8")
        (tmp_path / "broken.json").write_text("{", encoding="utf-8")
        with TestClient(app) as c:
            assert c.get("/api/calculi/Mine").status_code == 200
        config.calculus_registry.clear()

    def test_builtin_names_reserved(self, client):
        assert client.post("/api/calculi", json=_document("LK")).status_code == 400

    def test_duplicate_rejected(self, client):
        client.post("/api/calculi", json=_document())
        assert client.post("/api/calculi", json=_document()).status_code == 400

    def test_malformed_document(self, client):
        data = _document()
        data["rules"].append(data["rules"][0])
        assert client.post("/api/calculi", json=data).status_code == 400

    def test_upload(self, client):
        files = {"file": ("mine.json", json.dumps(_document("Uploaded")), "application/json")}
        response = client.post("/api/calculi/upload", files=files)
        assert response.status_code == 200
        assert response.json()["name"] == "Uploaded"

    def test_upload_requires_json(self, client):
        files = {"file": ("mine.txt", "{}", "text/plain")}
        assert client.post("/api/calculi/upload", files=files).status_code == 400

    def test_delete_builtin(self, client):
        assert client.delete("/api/calculi/LK").status_code == 400
        assert client.delete("/api/calculi/Nope").status_code == 404


class TestProofs:
    def test_prove_then_check(self, client):
        proved = client.post("/api/prove", json={"sequent": "p, p -> q |- q"}).json()
        assert proved["verdict"] == "proved"
        assert proved["rendered"].splitlines()[0].startswith("p, p -> q |- q")

        checked = client.post("/api/check", json={"proof": proved["proof"]}).json()
        assert checked["valid"] is True
        assert checked["calculus"] == "LK"

    def test_check_against_other_calculus(self, client):
        proved = client.post("/api/prove", json={"sequent": "|- p | ~p"}).json()
        checked = client.post("/api/check", json={"proof": proved["proof"], "calculus": "LJ"}).json()
        assert checked["valid"] is False
        assert checked["kind"] is not None

    def test_refuted(self, client):
        body = client.post("/api/prove", json={"sequent": "|- p | ~p", "calculus": "LJ"}).json()
        assert body["verdict"] == "refuted"
        assert body["proof"] is None

    def test_unknown(self, client):
        body = client.post("/api/prove", json={"sequent": "|- p -> p", "depth": 1}).json()
        assert body["verdict"] == "unknown"
        assert "depth" in body["reason"]

    @pytest.mark.parametrize(
        "payload, status",
        [
            ({"sequent": "p &"}, 400),
            ({"sequent": "p |- p", "calculus": "S4"}, 404),
            ({"sequent": "p |- p", "contraction": "often"}, 400),
            ({"sequent": "p |- p", "depth": 0}, 422),
        ],
    )
    def test_errors(self, client, payload, status):
        assert client.post("/api/prove", json=payload).status_code == status


class TestFormulas:
    def test_parse(self, client):
        body = client.post("/api/parse", json={"formula": "forall x. P(x, y) -> p"}).json()
        assert body == {
            "formula": "forall x. P(x, y) -> p",
            "propositional": False,
            "size": 2,
            "atoms": ["p"],
            "free_vars": ["y"],
        }

    def test_classify(self, client):
        assert client.post("/api/classify", json={"formula": "p & ~p"}).json()["classification"] == "Contradiction"
        assert client.post("/api/classify", json={"formula": "P(c)"}).status_code == 400

    def test_mirror(self, client):
        body = client.post("/api/mirror", json={"sequent": "p & ~p |-"}).json()
        assert body == {"sequent": "p & ~p |-", "mirror": "|- p & ~p", "valid": True, "mirror_valid": False}
