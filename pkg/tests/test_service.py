import pytest
from fastapi.testclient import TestClient

from moonshine.schemas import (
    FamilyPayload,
    SeriesPayload,
    VerifyResponse,
)
from moonshine.service import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_health(client):
    r = client.get("/health")
    assert r.status_code == 200
    assert r.json() == {"status": "ok"}


def test_expand_endpoint(client):
    r = client.post("/expand", json={"form": "j", "order": 8})
    assert r.status_code == 200
    payload = SeriesPayload.model_validate(r.json())
    assert [8, "20245856256"] in r.json()["terms"]
    assert payload.unit == 2


def test_expand_theta(client):
    r = client.post("/expand", json={"form": "niemeier:Leech", "order": 8})
    assert r.status_code == 200
    assert [4, "196560"] in r.json()["terms"]


def test_expand_unknown_form_404(client):
    r = client.post("/expand", json={"form": "zeta", "order": 8})
    assert r.status_code == 404
    body = r.json()
    assert body["error"] == "UnknownForm"
    assert body["code"] == 2


def test_expand_validation_error(client):
    r = client.post("/expand", json={"order": 8})
    assert r.status_code == 422


def test_extremal_family(client):
    r = client.post("/extremal", json={"k": 2, "order": 8})
    assert r.status_code == 200
    fam = FamilyPayload.model_validate(r.json())
    assert fam.g0_poly.poly == ["393192", "-48", "-1"]
    assert fam.k == 2


def test_extremal_specialize_accepts_int_or_string(client):
    for x in ("-24", -24):
        r = client.post("/extremal", json={"k": 1, "x": x, "order": 6})
        assert r.status_code == 200
        assert [2, "196884"] in r.json()["terms"]


def test_extremal_solve_g0(client):
    r = client.post("/extremal", json={"k": 2, "solve_g0": 393192})
    assert r.status_code == 200
    assert r.json()["roots"] == ["0", "-48"]


def test_extremal_k_out_of_range(client):
    r = client.post("/extremal", json={"k": 9})
    assert r.status_code == 422


def test_decompose_value(client):
    r = client.post("/decompose", json={"value": "864299970"})
    assert r.status_code == 200
    assert r.json()["terms"] == [
        ["842609326", "1"],
        ["21296876", "1"],
        ["196883", "2"],
        ["1", "2"],
    ]


def test_decompose_form_range(client):
    r = client.post("/decompose", json={"form": "j", "from": 1, "to": 10})
    assert r.status_code == 200
    assert [d["exponent"] for d in r.json()] == [2, 4, 6, 8, 10]


def test_decompose_requires_exactly_one_source(client):
    assert client.post("/decompose", json={}).status_code == 422
    assert (
        client.post("/decompose", json={"value": "5", "form": "j"}).status_code == 422
    )


def test_decompose_negative_value_400(client):
    r = client.post("/decompose", json={"value": "-1"})
    assert r.status_code == 400
    assert r.json()["error"] == "NegativeValue"
    assert r.json()["code"] == 5


def test_verify_builtin(client):
    r = client.post("/verify", json={"i_max": 1})
    assert r.status_code == 200
    payload = VerifyResponse.model_validate(r.json())
    assert len(payload.reports) == 14
    assert payload.all_pass is False
    assert sum(1 for rep in payload.reports if rep.all_pass) == 13


def test_verify_custom_identities(client):
    r = client.post(
        "/verify",
        json={"identities": ["k=1: g[2*i+2] = j[2*i+2]"], "i_max": 4},
    )
    assert r.status_code == 200
    assert r.json()["all_pass"] is True


def test_verify_syntax_error_400(client):
    r = client.post("/verify", json={"identities": ["k=2: g[4i+"]})
    assert r.status_code == 400
    assert r.json()["error"] == "IdentitySyntaxError"


def test_niemeier_catalog(client):
    r = client.get("/niemeier")
    assert r.status_code == 200
    records = r.json()
    assert len(records) == 24
    assert {"name": "D24", "coxeter_h": 46, "massless": 1128} in records
