import pytest
from fastapi.testclient import TestClient

from isoform.service import app

client = TestClient(app)


def test_health():
    r = client.get("/health")
    assert r.status_code == 200
    assert r.json()["status"] == "ok"


def test_diagonalize_endpoint():
    r = client.post(
        "/diagonalize",
        json={"field": "Fp:7", "gram": [["0", "1"], ["1", "0"]]},
    )
    assert r.status_code == 200
    body = r.json()
    assert body["congruence_check"] is True
    assert body["invertible_check"] is True
    assert body["diagonal_fixed_check"] is True
    assert body["diagonal"][0] == "2"


def test_diagonalize_rejects_non_hermitian():
    r = client.post(
        "/diagonalize",
        json={"field": "Fp:7", "gram": [["0", "1"], ["2", "0"]]},
    )
    assert r.status_code == 422
    assert r.json()["detail"]["error"] == "InvalidInput"


def test_diagonalize_rejects_bad_field():
    r = client.post("/diagonalize", json={"field": "Fp:6", "gram": [["1"]]})
    assert r.status_code == 422
    assert r.json()["detail"]["error"] == "ParseError"


def test_isotropic_endpoint_found():
    r = client.post(
        "/isotropic",
        json={"field": "Fp2:3", "gram": [["1", "0"], ["0", "1"]]},
    )
    assert r.status_code == 200
    body = r.json()
    assert body["found"] is True
    assert body["witness"] == ["1+1*u", "1"]
    assert body["construction"] == "NormEquation"
    assert body["isotropic_check"] is True


def test_isotropic_endpoint_not_found():
    r = client.post(
        "/isotropic",
        json={"field": "Q", "gram": [["1", "0"], ["0", "1"]]},
    )
    assert r.status_code == 200
    body = r.json()
    assert body["found"] is False and body["error"] == "NotFound"


def test_norm_solve_endpoint():
    r = client.post("/norm-solve", json={"field": "Fp2:3", "target": "2"})
    assert r.status_code == 200
    assert r.json()["solved"] is True and r.json()["norm_check"] is True

    r = client.post("/norm-solve", json={"field": "Fp:7", "target": "3"})
    assert r.status_code == 200
    body = r.json()
    assert body["solved"] is False and body["error"] == "NormNotRepresented"

    r = client.post("/norm-solve", json={"field": "Fp:7", "target": "0"})
    assert r.status_code == 422
    assert r.json()["detail"]["error"] == "PreconditionViolated"


def test_cw_solve_endpoint():
    quadric = {
        "field": "Fp:7",
        "n_vars": 3,
        "degree": 2,
        "monomials": [
            {"coeff": "1", "exponents": [2, 0, 0]},
            {"coeff": "1", "exponents": [0, 2, 0]},
            {"coeff": "1", "exponents": [0, 0, 2]},
        ],
    }
    r = client.post("/cw-solve", json=quadric)
    assert r.status_code == 200
    assert r.json()["found"] is True and r.json()["solution"] == ["1", "2", "3"]

    no_zero = {
        "field": "Fp:3",
        "n_vars": 2,
        "degree": 2,
        "monomials": [
            {"coeff": "1", "exponents": [2, 0]},
            {"coeff": "1", "exponents": [0, 2]},
        ],
    }
    r = client.post("/cw-solve", json=no_zero)
    assert r.status_code == 200
    assert r.json()["found"] is False and r.json()["error"] == "NoSolutionFound"


SWAP_REP = {
    "field": "Fp:7",
    "dim": 2,
    "generators": [[["0", "1"], ["1", "0"]]],
}


def test_rep_close_endpoint():
    r = client.post("/rep/close", json=SWAP_REP)
    assert r.status_code == 200
    assert r.json()["order"] == 2 and r.json()["closure_check"] is True


def test_rep_close_singular_generator():
    bad = {"field": "Fp:7", "dim": 2, "generators": [[["1", "1"], ["1", "1"]]]}
    r = client.post("/rep/close", json=bad)
    assert r.status_code == 422
    assert r.json()["detail"]["error"] == "SingularGenerator"


def test_rep_average_endpoint():
    body = dict(SWAP_REP, seed_gram=[["1", "0"], ["0", "2"]])
    r = client.post("/rep/average", json=body)
    assert r.status_code == 200
    data = r.json()
    assert data["averaged_gram"] == [["3", "0"], ["0", "3"]]
    assert data["invariant_check"] is True and data["degenerate"] is False


def test_rep_decompose_endpoint():
    r = client.post("/rep/decompose", json=SWAP_REP)
    assert r.status_code == 200
    data = r.json()
    assert data["dimension_sum_check"] is True and data["invariant_check"] is True
    assert sorted(len(s) for s in data["summands"]) == [1, 1]


def test_rep_decompose_modular_refusal():
    c3_f3 = {
        "field": "Fp:3",
        "dim": 3,
        "generators": [[["0", "0", "1"], ["1", "0", "0"], ["0", "1", "0"]]],
    }
    r = client.post("/rep/decompose", json=c3_f3)
    assert r.status_code == 422
    assert r.json()["detail"]["error"] == "CharacteristicDividesOrder"


def test_counterexample_endpoint():
    trivial_f9 = {"field": "Fp2:3", "dim": 2, "generators": []}
    r = client.post("/counterexample", json=trivial_f9)
    assert r.status_code == 200
    data = r.json()
    assert data["found"] is True
    assert data["w_contained_in_w_perp"] is True
    assert data["restriction_rank"] == 0
    assert data["direct_sum_check"] is True

    trivial_q = {"field": "Q", "dim": 2, "generators": []}
    r = client.post("/counterexample", json=trivial_q)
    assert r.status_code == 200
    data = r.json()
    assert data["found"] is False and data["error"] == "NoIsotropicVector"


def test_validation_error_is_422():
    r = client.post("/diagonalize", json={"field": "Fp:7"})
    assert r.status_code == 422
