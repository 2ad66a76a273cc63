"""HTTP surface: endpoints, wire formats and error mapping."""

import pytest
from fastapi.testclient import TestClient

from z2z4codes.service import app

C1_TEXT = "2 2\n11|20\n01|11\n"
C2_TEXT = "2 1\n11|0\n00|2\n"


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as c:
        yield c


def test_health(client):
    r = client.get("/health")
    assert r.status_code == 200 and r.json() == {"status": "ok"}


def test_info_report(client):
    r = client.post("/info", json={"text": C1_TEXT})
    assert r.status_code == 200
    body = r.json()
    assert body["params"] == {"alpha": 2, "beta": 2, "gamma": 1, "delta": 1, "kappa": 1}
    assert body["size"] == 8
    assert body["self_dual"] is True
    assert body["cls"] == "Type 0"
    assert body["separable"] is False
    assert body["antipodal"] is False
    assert body["enumerator"] == "x^6 + 4*x^3*y^3 + 3*x^2*y^4"
    assert body["shadow_size"] == 8
    assert "type: (2, 2; 1, 1; 1)" in body["text"]


def test_classify_text(client):
    r = client.post("/classify", json={"text": "8 4\n" + "\n".join([
        "10010110|0000", "01001110|0000", "00100111|0000", "00000110|2000",
        "00000110|0200", "00000110|0020", "00011011|1111",
    ]) + "\n"})
    assert r.status_code == 200
    assert r.json()["text"] == "Type II, non-separable, antipodal"


def test_dual_round_trip(client):
    r = client.post("/dual", json={"text": C1_TEXT})
    assert r.status_code == 200
    body = r.json()
    r2 = client.post("/dual", json={"text": C1_TEXT, "oracle": True})
    assert r2.json()["params"] == body["params"]
    # both dual paths give the same code
    info1 = client.post("/info", json={"text": body["code"]}).json()
    info2 = client.post("/info", json={"text": r2.json()["code"]}).json()
    assert info1["enumerator"] == info2["enumerator"] == "x^6 + 4*x^3*y^3 + 3*x^2*y^4"


def test_weight_enumerator_variants(client):
    plain = client.post("/weight-enumerator", json={"text": C1_TEXT}).json()["text"]
    even = client.post("/weight-enumerator", json={"text": C1_TEXT, "variant": "even"}).json()["text"]
    sh = client.post("/weight-enumerator", json={"text": C1_TEXT, "variant": "shadow"}).json()["text"]
    coeffs = client.post("/weight-enumerator", json={"text": C1_TEXT, "format": "coeffs"}).json()["text"]
    assert plain == "x^6 + 4*x^3*y^3 + 3*x^2*y^4"
    assert even == "x^6 + 3*x^2*y^4"
    assert sh == "3*x^4*y^2 + 4*x^3*y^3 + y^6"
    assert coeffs == "6: 1 0 0 4 3 0 0"


def test_shadow_variant_needs_type0(client):
    r = client.post("/weight-enumerator", json={"text": C2_TEXT, "variant": "shadow"})
    assert r.status_code == 422
    assert r.json()["detail"]["type"] == "precondition"


def test_gleason(client):
    r = client.post("/gleason", json={"text": C1_TEXT})
    assert r.status_code == 200
    body = r.json()
    assert body["cls"] == "Type 0"
    assert body["text"].endswith("g1^3 - 3*g1*g2^2 - 2*g2^3")
    coeffs = {(t["g1_power"], t["g2_power"]): (t["numerator"], t["denominator"]) for t in body["terms"]}
    assert coeffs[(3, 0)] == (1, 1) and coeffs[(0, 3)] == (-2, 1)


def test_shadow_endpoint(client):
    r = client.post("/shadow", json={"text": C1_TEXT})
    assert r.status_code == 200
    body = r.json()
    assert body["size"] == 8
    assert body["enumerator"] == "3*x^4*y^2 + 4*x^3*y^3 + y^6"
    assert "01|13" in body["vectors"] and "01|11" not in body["vectors"]


def test_neighbor_endpoint(client):
    r = client.post("/neighbor", json={"text": C1_TEXT, "vector": "11|22"})
    assert r.status_code == 200
    cls = client.post("/classify", json={"text": r.json()["code"]}).json()
    assert cls["self_dual"] is True and cls["cls"] != "Type 0"


def test_neighbor_precondition(client):
    r = client.post("/neighbor", json={"text": C1_TEXT, "vector": "01|11"})
    assert r.status_code == 422
    assert r.json()["detail"]["type"] == "precondition"


def test_glue_endpoint(client):
    r = client.post("/glue", json={"text_c": C1_TEXT, "text_d": C1_TEXT})
    assert r.status_code == 200
    body = r.json()
    assert body["variant"] == "matched"
    assert body["params"]["alpha"] == 4 and body["params"]["beta"] == 4


def test_construct_by_name_and_shape(client):
    by_name = client.post("/construct", json={"name": "C2"}).json()
    assert by_name["code"] == C2_TEXT
    by_shape = client.post(
        "/construct", json={"alpha": 2, "beta": 1, "cls": "TypeI", "separable": True}
    ).json()
    assert by_shape["code"] == C2_TEXT


def test_construct_requires_name_or_shape(client):
    r = client.post("/construct", json={})
    assert r.status_code == 422


def test_construct_unknown_name(client):
    r = client.post("/construct", json={"name": "C9"})
    assert r.status_code == 422


def test_search_endpoint(client):
    r = client.post("/search", json={"alpha": 2, "beta": 1})
    assert r.status_code == 200
    body = r.json()
    assert body["count"] == 1
    assert body["matches"][0]["generators"] == ["11|0", "00|2"]
    r0 = client.post("/search", json={"alpha": 2, "beta": 2, "cls": "Type0"})
    assert r0.json()["count"] == 2


def test_search_guard(client):
    r = client.post("/search", json={"alpha": 8, "beta": 4})
    assert r.status_code == 413
    assert r.json()["detail"]["type"] == "guard"


def test_parse_error_mapping(client):
    r = client.post("/info", json={"text": "not a header\n"})
    assert r.status_code == 400
    detail = r.json()["detail"]
    assert detail["type"] == "parse" and "line 1" in detail["message"]


def test_guard_error_mapping(client):
    r = client.post("/info", json={"text": "20 20\n"})
    assert r.status_code == 413
    assert r.json()["detail"]["type"] == "guard"
    # per-request override
    ok = client.post("/info", json={"text": "17 0\n", "guard": 20})
    assert ok.status_code == 200


def test_verify_endpoint(client):
    r = client.post("/verify", json={})
    assert r.status_code == 200
    body = r.json()
    assert body["failed"] == 0
    assert body["passed"] == len(body["checks"]) >= 15
    assert "checks passed" in body["text"]
