from areawalks import __version__
from areawalks.laurent import AreaPolynomial
from areawalks.oracle import dp_enumerate


def poly_from_coeffs(coeffs):
    return AreaPolynomial({int(t): int(c) for t, c in coeffs.items()})


def test_health(client):
    resp = client.get("/health")
    assert resp.status_code == 200
    assert resp.json() == {"status": "ok", "version": __version__}


def test_gf_open(client):
    resp = client.post("/gf", json={"n_steps": 3})
    assert resp.status_code == 200
    body = resp.json()
    assert body["length"] == 3
    assert body["line"] is None
    assert body["coeffs"] == {"-2": "12", "0": "40", "2": "12"}
    assert body["total"] == "64"


def test_gf_line(client):
    resp = client.post("/gf", json={"n_steps": 2, "line": 0})
    assert resp.json()["coeffs"] == {"-1": "2", "0": "4", "1": "2"}
    # negative lines resolve through the mirror symmetry
    mirrored = client.post("/gf", json={"n_steps": 2, "line": -2})
    assert mirrored.json()["coeffs"] == {"-1": "1", "0": "2", "1": "1"}
    raw = client.post("/gf", json={"n_steps": 2, "line": 2, "raw": True})
    assert raw.json()["coeffs"] == {"-1": "2", "0": "4", "1": "2"}


def test_gf_unreachable_line_is_empty(client):
    resp = client.post("/gf", json={"n_steps": 2, "line": 6})
    assert resp.status_code == 200
    assert resp.json()["coeffs"] == {}
    assert resp.json()["total"] == "0"


def test_gf_parity_mismatch_rejected(client):
    resp = client.post("/gf", json={"n_steps": 2, "line": 1})
    assert resp.status_code == 422
    assert "parity" in resp.json()["detail"]


def test_gf_cap_enforced(client):
    resp = client.post("/gf", json={"n_steps": 29})
    assert resp.status_code == 422
    # caps live in the request, so a client can lower or raise them
    lowered = client.post("/gf", json={"n_steps": 5, "formula_cap": 4})
    assert lowered.status_code == 422
    raised = client.post("/gf", json={"n_steps": 5, "formula_cap": 5})
    assert raised.status_code == 200
    assert raised.json()["total"] == str(4**5)


def test_gf_rejects_bad_length(client):
    assert client.post("/gf", json={"n_steps": 0}).status_code == 422
    assert client.post("/gf", json={"n_steps": "x"}).status_code == 422


def test_count_rows(client):
    resp = client.post("/count", json={"n_steps": 4})
    assert resp.status_code == 200
    body = resp.json()
    assert body["length"] == 4
    rows = {row["t"]: row["count"] for row in body["rows"]}
    assert rows == {
        -4: "8", -3: "16", -2: "16", -1: "48",
        0: "80", 1: "48", 2: "16", 3: "16", 4: "8",
    }
    ts = [row["t"] for row in body["rows"]]
    assert ts == sorted(ts)


def test_count_only_t(client):
    resp = client.post("/count", json={"n_steps": 3, "only_t": 2})
    assert resp.json()["rows"] == [{"t": 2, "count": "12"}]
    # a t outside the support is a zero row, not an error
    resp = client.post("/count", json={"n_steps": 3, "only_t": 1})
    assert resp.json()["rows"] == [{"t": 1, "count": "0"}]


def test_count_cap(client):
    assert client.post("/count", json={"n_steps": 17}).status_code == 422


def test_verify_single_suite(client):
    resp = client.post("/verify", json={"suites": ["formulas"], "max_n": 6})
    assert resp.status_code == 200
    body = resp.json()
    assert body["passed"] is True
    assert len(body["checks"]) >= 3
    for check in body["checks"]:
        assert check["status"] == "pass"
        assert check["name"].startswith("formulas/")


def test_verify_unknown_suite(client):
    resp = client.post("/verify", json={"suites": ["nope"]})
    assert resp.status_code == 422


def test_verify_torus_ps(client):
    resp = client.post(
        "/verify", json={"suites": ["torus"], "max_n": 4, "ps": [[1, 2]]}
    )
    body = resp.json()
    assert resp.status_code == 200
    assert body["passed"] is True


def test_bench(client):
    resp = client.post("/bench", json={"min_n": 2, "max_n": 4, "methods": ["dp", "formula"]})
    rows = resp.json()["rows"]
    assert {(r["n"], r["method"]) for r in rows} == {
        (n, m) for n in (2, 3, 4) for m in ("dp", "formula")
    }
    for row in rows:
        assert row["millis"] >= 0
        assert row["terms"] >= 1


def test_bench_skips_over_cap(client):
    resp = client.post(
        "/bench", json={"min_n": 3, "max_n": 5, "methods": ["brute"], "brute_cap": 4}
    )
    assert [r["n"] for r in resp.json()["rows"]] == [3, 4]


def test_bench_rejects_reversed_range(client):
    assert client.post("/bench", json={"min_n": 5, "max_n": 2}).status_code == 422


def test_histogram_round_trip(client):
    resp = client.post("/oracle/histogram", json={"n_steps": 3, "method": "dp"})
    body = resp.json()
    assert body["length"] == 3
    total = AreaPolynomial()
    for entry in body["endpoints"]:
        total = total + poly_from_coeffs(entry["coeffs"])
    assert total == dp_enumerate(3).total()


def test_histogram_methods_agree(client):
    dp = client.post("/oracle/histogram", json={"n_steps": 5, "method": "dp"}).json()
    brute = client.post("/oracle/histogram", json={"n_steps": 5, "method": "brute"}).json()
    assert dp == brute


def test_histogram_cap(client):
    assert client.post("/oracle/histogram", json={"n_steps": 15, "method": "brute"}).status_code == 422
    assert client.post("/oracle/histogram", json={"n_steps": 15, "method": "dp"}).status_code == 200


def test_representation_q(client):
    resp = client.post("/torus/representation", json={"p": 1, "kind": "q", "s": 2})
    body = resp.json()
    assert resp.status_code == 200
    assert body["q"] == 5 and body["dim"] == 5
    assert abs(body["traces"]["sigma"]["re"] - 1.0) < 1e-12
    assert max(body["relation_residuals"].values()) < 1e-12


def test_representation_validation(client):
    # missing s for kind q
    assert client.post("/torus/representation", json={"p": 1, "kind": "q"}).status_code == 422
    # non-coprime p, q
    resp = client.post("/torus/representation", json={"p": 5, "kind": "q", "s": 2})
    assert resp.status_code == 422
    # doubled representation only at zero casimirs
    resp = client.post(
        "/torus/representation",
        json={"p": 1, "kind": "2q", "q": 3, "casimir_x": "pi/q"},
    )
    assert resp.status_code == 422
    resp = client.post("/torus/representation", json={"p": 1, "kind": "2q", "q": 3})
    assert resp.status_code == 200
    assert resp.json()["dim"] == 6


def test_walk_area(client):
    resp = client.post("/walk/area", json={"steps": "RULD"})
    body = resp.json()
    assert body["double_area"] == 2
    assert body["endpoint_k"] == 0 and body["endpoint_l"] == 0
    assert body["positions"] == [[0, 0], [1, 0], [1, 1], [0, 1], [0, 0]]


def test_walk_rejects_bad_alphabet(client):
    assert client.post("/walk/area", json={"steps": "RUX"}).status_code == 422
