import pytest

from app import app


@pytest.fixture
def client():
    app.config["TESTING"] = True
    with app.test_client() as client:
        yield client


DEGREE_TWO = {"ring": {"field": {"Fp": 101}, "vars": ["x", "y"], "degrees": [[1], [1]]},
              "payload": {"dm": {"degree": [2], "twists": [[0], [0]],
                                 "del": [["x*y", "-x^2"], ["y^2", "-x*y"]]}}}


def test_list_jobs(client):
    jobs = client.get("/").get_json()
    assert jobs["res-dm"]["payload"] == "dm"
    assert "toric-rr" in jobs


def test_run_job(client):
    response = client.post("/jobs/res-dm", json=DEGREE_TWO)
    assert response.status_code == 200
    report = response.get_json()
    assert report["status"] == "ok"
    assert report["summary"]["rank"] == 4


def test_query_string_options(client):
    response = client.post("/jobs/res-dm?max_iter=1", json=DEGREE_TWO)
    assert response.status_code == 200
    assert response.get_json()["status"] == "truncated"


def test_schema_errors(client):
    response = client.post("/jobs/res-dm", json={**DEGREE_TWO, "payload": {"dm": {"degree": [2, 1]}}})
    assert response.status_code == 400
    assert response.get_json()["pointer"] == "/payload/dm/degree"
    assert client.post("/jobs/resolve", json=DEGREE_TWO).get_json()["pointer"] == "/command"
    assert client.post("/jobs/res-dm", data="not json").status_code == 400


def test_algebraic_errors(client):
    doc = {**DEGREE_TWO, "payload": {"dm": {"degree": [1], "twists": [[0], [0]],
                                            "del": [["x", "0"], ["0", "0"]]}}}
    response = client.post("/jobs/res-dm", json=doc)
    assert response.status_code == 422
    assert response.get_json()["kind"] == "NotSquareZero"
