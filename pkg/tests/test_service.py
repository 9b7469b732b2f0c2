"""Service endpoint tests against the in-process app."""

import pytest
from fastapi.testclient import TestClient

from kirwanlab.service.app import create_app

CP13 = {"factors": [{"n": 1, "weights": [0, 1]}, {"n": 1, "weights": [0, 2]}, {"n": 1, "weights": [0, 4]}]}
CP2 = {"factors": [{"n": 2, "weights": [0, 1, 3]}]}
CP13_BASIS4 = [
    [2, 0, 0, 0],
    [0, 2, 0, 0],
    [0, 1, 1, 0],
    [0, 1, 0, 1],
    [0, 0, 2, 0],
    [0, 0, 1, 1],
    [0, 0, 0, 2],
]


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def test_health(client):
    r = client.get("/health")
    assert r.status_code == 200 and r.json()["status"] == "ok"


def test_ring(client):
    r = client.post("/ring", json={"spec": CP2})
    assert r.status_code == 200
    data = r.json()
    assert data["variables"] == ["t", "x"]
    # (x - 0t)(x - 1t)(x - 3t) = x^3 - 4tx^2 + 3t^2 x
    assert data["relations"] == [
        [
            {"exponents": [2, 1], "coeff": "3"},
            {"exponents": [1, 2], "coeff": "-4"},
            {"exponents": [0, 3], "coeff": "1"},
        ]
    ]
    assert data["graded_dimensions"]["2"] == 2


def test_fixed_points(client):
    r = client.post("/fixed-points", json={"spec": CP13})
    pts = r.json()["points"]
    assert len(pts) == 8
    assert pts[0] == {
        "choice": [0, 0, 0],
        "mu": "0",
        "weight_product": "8",
        "per_factor_mu": ["0", "0", "0"],
    }


def test_chambers(client):
    r = client.post("/chambers", json={"spec": CP13})
    chs = r.json()["chambers"]
    assert len(chs) == 7
    assert chs[4] == {"lower": "4", "upper": "5", "representative": "9/2"}


def test_integrate_expression(client):
    r = client.post("/integrate", json={"spec": CP13, "alpha": "x2^2", "c": "9/2"})
    assert r.status_code == 200 and r.json() == {"value": "2"}


def test_integrate_term_list(client):
    alpha = [{"exponents": [0, 0, 0, 2], "coeff": "1"}]
    r = client.post("/integrate", json={"spec": CP13, "alpha": alpha, "c": "9/2"})
    assert r.json() == {"value": "2"}


def test_integrate_critical_level_is_error(client):
    r = client.post("/integrate", json={"spec": CP13, "alpha": "t^2", "c": "3"})
    assert r.status_code == 400
    assert r.json()["error"]["type"] == "critical_level"


def test_integrate_wrong_degree_is_error(client):
    r = client.post("/integrate", json={"spec": CP13, "alpha": "t", "c": "1/2"})
    assert r.status_code == 400
    assert r.json()["error"]["type"] == "wrong_degree"


def test_basis_standard_and_custom(client):
    r = client.post("/basis", json={"spec": CP13, "degree": 4})
    assert r.json()["monomials"] == [
        [2, 0, 0, 0],
        [1, 1, 0, 0],
        [1, 0, 1, 0],
        [1, 0, 0, 1],
        [0, 1, 1, 0],
        [0, 1, 0, 1],
        [0, 0, 1, 1],
    ]
    r = client.post("/basis", json={"spec": CP13, "degree": 4, "custom": CP13_BASIS4})
    assert r.status_code == 200
    assert r.json()["names"][1] == "x0^2"
    bad = CP13_BASIS4[:-1] + [[1, 1, 0, 0]]
    r = client.post("/basis", json={"spec": CP13, "degree": 4, "custom": bad})
    assert r.status_code == 400
    assert r.json()["error"]["type"] == "custom_basis_not_a_basis"


def test_tables_json_and_csv(client):
    r = client.post("/tables", json={"spec": CP13, "basis": CP13_BASIS4})
    data = r.json()
    assert data["contribution"]["rows"][3] == ["1/8", "1/8", "1/4", "0", "1/2", "0", "0"]
    assert data["chamber"]["rows"][4] == ["1/8", "0", "-1/4", "0", "0", "0", "2"]
    r = client.post("/tables", json={"spec": CP13, "basis": CP13_BASIS4, "format": "csv"})
    rendered = r.json()["rendered"]
    first = rendered["contribution"].splitlines()
    assert first[0] == "mu,t^2,x0^2,x0*x1,x0*x2,x1^2,x1*x2,x2^2"
    assert first[1] == "0,1/8,0,0,0,0,0,0"


def test_pairing_endpoint(client):
    payload = {
        "spec": CP13,
        "q": 2,
        "chamber": {"rep": "9/2"},
        "custom_bases": {"4": CP13_BASIS4},
    }
    r = client.post("/pairing", json=payload)
    data = r.json()
    assert data["entries"] == [
        ["1/8", "0", "0", "1/2"],
        ["0", "0", "-1/4", "0"],
        ["0", "-1/4", "0", "0"],
        ["1/2", "0", "0", "2"],
    ]
    r = client.post("/pairing", json={"spec": CP13, "q": 2, "chamber": {"index": 5}})
    assert r.json()["entries"][0][3] == "1/2"


def test_pairing_bad_chamber(client):
    r = client.post("/pairing", json={"spec": CP13, "q": 2, "chamber": {"rep": "100"}})
    assert r.status_code == 400
    r = client.post("/pairing", json={"spec": CP13, "q": 2, "chamber": {"index": 9}})
    assert r.status_code == 400


def test_bdc_cp2(client):
    r = client.post("/bdc", json={"spec": CP2})
    data = r.json()
    assert data["total_dimension"] == 0
    assert data["per_degree_dimension"] == {"0": 0, "2": 0}
    rep = data["representative"]
    blocks = {b["q"]: b["entries"] for b in rep["blocks"]}
    assert blocks[0] == [["-3", "3"]]
    assert blocks[2] == [["-3"], ["3"]]


def test_bdc_cp13_and_verify_roundtrip(client):
    r = client.post(
        "/bdc", json={"spec": CP13, "custom_bases": {"4": CP13_BASIS4}}
    )
    data = r.json()
    assert data["total_dimension"] == 2
    assert data["per_degree_dimension"] == {"0": 0, "2": 2, "4": 0}
    class_file = data["representative"]
    for index in (1, 4, 7):
        r2 = client.post(
            "/verify",
            json={"spec": CP13, "class_file": class_file, "chamber": {"index": index}},
        )
        assert r2.json() == {"is_bdc": True}
    # damage one entry
    class_file["blocks"][0]["entries"][0][0] = "17"
    r3 = client.post(
        "/verify",
        json={"spec": CP13, "class_file": class_file, "chamber": {"index": 1}},
    )
    assert r3.json() == {"is_bdc": False}


def test_bdc_chamber_subset(client):
    r = client.post("/bdc", json={"spec": CP2, "chambers": [2]})
    assert r.status_code == 200
    # one chamber constrains less than both: each rank-1 block gains a free
    # parameter, so the dimension grows from 0 to 2
    assert r.json()["per_degree_dimension"] == {"0": 1, "2": 1}
    assert r.json()["total_dimension"] == 2


def test_rinv(client):
    rep = client.post("/bdc", json={"spec": CP2}).json()["representative"]
    r = client.post(
        "/rinv",
        json={
            "spec": CP2,
            "class_file": rep,
            "alpha": "1",
            "chamber": {"index": 1},
        },
    )
    assert r.status_code == 200
    data = r.json()
    assert data["terms"]
    # result is a degree-0 class: the constant 1 (right inverse of a ring map)
    assert data["terms"] == [{"exponents": [0, 0], "coeff": "1"}]


def test_diagonal_endpoint(client):
    r = client.get("/diagonal-cp1")
    data = r.json()
    assert data["variables"] == ["t1", "t2", "u_l", "u_r"]
    assert data["image_of_one"] == [
        {"exponents": [1, 0, 0, 0], "coeff": "1"},
        {"exponents": [0, 1, 0, 0], "coeff": "1"},
        {"exponents": [0, 0, 1, 0], "coeff": "-1"},
        {"exponents": [0, 0, 0, 1], "coeff": "-1"},
    ]
    assert data["image_of_u"] == [
        {"exponents": [1, 1, 0, 0], "coeff": "1"},
        {"exponents": [0, 0, 1, 1], "coeff": "-1"},
    ]
    assert data["pretty"]["fiber_integral_matrix"] == "-1 , -t1 - t2; 0 , -1"


def test_compose_endpoint(client):
    cp1 = {"factors": [{"n": 1, "weights": [0, 1]}]}
    lm1 = [{"exponents": [0, 0, 0, 0], "coeff": "1"}]
    zero = []
    r = client.post(
        "/compose",
        json={"spec_m": cp1, "spec_n": cp1, "lm1": lm1, "lmu": zero, "ln1": lm1, "lnu": zero},
    )
    data = r.json()
    assert data["variables"] == ["t1", "t2", "x0_l", "x1_l", "x0_r", "x1_r"]
    assert data["out1"] == [
        {"exponents": [1, 0, 0, 0, 0, 0], "coeff": "1"},
        {"exponents": [0, 1, 0, 0, 0, 0], "coeff": "1"},
    ]
    assert data["out2"] == [{"exponents": [1, 1, 0, 0, 0, 0], "coeff": "1"}]


def test_traintrack_verify_endpoint(client):
    track = {
        "vertices": [
            {"name": "s", "kind": "boundary"},
            {"name": "e", "kind": "boundary"},
            {"name": "v1", "kind": "branch"},
            {"name": "v2", "kind": "branch"},
        ],
        "branches": [
            {"name": "in", "tail": "s", "head": "v1", "weight": "1"},
            {"name": "top", "tail": "v1", "head": "v2", "weight": "1/2"},
            {"name": "bot", "tail": "v1", "head": "v2", "weight": "1/2"},
            {"name": "out", "tail": "v2", "head": "e", "weight": "1"},
        ],
    }
    r = client.post("/traintrack/verify", json=track)
    assert r.json() == {"valid_weighting": True, "boundary_balance": ["1", "1"]}
    track["branches"][3]["weight"] = "2"
    r = client.post("/traintrack/verify", json=track)
    assert r.json() == {"valid_weighting": False, "boundary_balance": None}


def test_line_weight_endpoint(client):
    r = client.post("/traintrack/line-weight", json={"orders": [2, 2, 2]})
    assert r.json() == {"value": "1/8"}


def test_paper_check_endpoint(client):
    r = client.post("/paper-check")
    data = r.json()
    assert data["ok"] is True
    names = [c["name"] for c in data["checks"]]
    assert "cp13.contribution_table" in names
    assert "cp2.unique_class_bottom_block" in names


def test_validation_error_names_factor(client):
    bad = {"factors": [{"n": 1, "weights": [0, 1]}, {"n": 1, "weights": [5, 5]}]}
    r = client.post("/chambers", json={"spec": bad})
    assert r.status_code == 400
    assert "factor 1" in r.json()["error"]["message"]
