import json
from pathlib import Path

import pytest

from multibgg.cli import main

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


def _run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def _run_json(capsys, path):
    code, out, err = _run(capsys, "run", str(path), "--format", "json")
    assert code == 0, err
    return json.loads(out)


def _write_job(tmp_path, doc):
    path = tmp_path / "job.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    return path


DEGREE_TWO_RING = {"field": {"Fp": 101}, "vars": ["x", "y"], "degrees": [[1], [1]]}


@pytest.mark.parametrize("name, summary", [
    ("res_dm_degree_two.json",
     {"rank": 4, "degrees": [[1], [0], [0], [-1]], "blocks": [1, 2, 1], "iterations": 3, "minimal": False}),
    ("minimize_dm_degree_two.json",
     {"rank before": 4, "rank": 2, "degrees": [[0], [0]], "minimal": True}),
    ("res_min_flag_koszul.json",
     {"rank": 4, "degrees": [[2], [1], [1], [0]], "blocks": [1, 2, 1], "iterations": 3, "minimal": True}),
    ("toric_ll_hirzebruch.json",
     {"ranks": {"-4": 1, "-3": 4, "-2": 6, "-1": 4, "0": 1}}),
    ("linear_strand_hirzebruch.json",
     {"ranks": {"0": 1, "1": 1}, "source degree": [0, 0], "strongly linear": True}),
    ("linear_strand_curve.json",
     {"ranks": {"0": 3, "1": 6, "2": 3}, "source degree": [1], "strongly linear": True}),
])
def test_corpus_summaries(capsys, name, summary):
    report = _run_json(capsys, CORPUS / name)
    assert report["schema"] == 1
    assert report["status"] == "ok"
    assert report["summary"] == summary
    assert all(section["data"]["schema"] == 1 for section in report["sections"])


@pytest.mark.parametrize("name, rank", [
    ("toric_rr_default_window.json", 5),
    ("toric_rr_degree_list.json", 6),
    ("toric_rr_finite_length.json", 8),
])
def test_corpus_toric_rr(capsys, name, rank):
    report = _run_json(capsys, CORPUS / name)
    assert report["summary"]["rank"] == rank
    assert len(report["summary"]["degrees"]) == rank


def test_text_report(capsys):
    code, out, _ = _run(capsys, "run", str(CORPUS / "res_dm_degree_two.json"))
    assert code == 0
    assert out.startswith("== res-dm (ok)")
    assert "rank: 4" in out
    assert "-- free flag" in out


def test_both_formats(capsys, tmp_path):
    out_file = tmp_path / "report.txt"
    code, out, _ = _run(capsys, "run", str(CORPUS / "toric_ll_hirzebruch.json"), "--format", "both",
                        "--out", str(out_file))
    assert code == 0
    assert out == ""
    text = out_file.read_text(encoding="utf-8")
    assert text.startswith("== toric-ll (ok)")
    assert '"command": "toric-ll"' in text


def test_malformed_degree_is_a_schema_error(capsys, tmp_path):
    spec = _write_job(tmp_path, {"schema": 1, "command": "res-dm", "ring": DEGREE_TWO_RING,
                                  "payload": {"dm": {"degree": [2, 1], "twists": [[0]], "del": "zero"}}})
    code, out, err = _run(capsys, "run", str(spec))
    assert code == 2
    assert out == ""
    assert err.startswith("error:")
    assert "/payload/dm/degree" in err


@pytest.mark.parametrize("doc, pointer", [
    ({"schema": 1, "command": "res-dm", "ring": DEGREE_TWO_RING, "payload": {"dm": {}}, "options": {"speed": 1}},
     "/options/speed"),
    ({"schema": 1, "command": "resolve", "ring": DEGREE_TWO_RING}, "/command"),
    ({"schema": 2, "command": "res-dm", "ring": DEGREE_TWO_RING}, "/schema"),
    ({"schema": 1, "command": "res-dm", "ring": "projective 2"}, "/ring/builtin"),
    ({"schema": 1, "command": "res-dm", "ring": DEGREE_TWO_RING, "payload": {}}, "/payload/dm"),
])
def test_job_file_errors(capsys, tmp_path, doc, pointer):
    code, _, err = _run(capsys, "run", str(_write_job(tmp_path, doc)))
    assert code == 2
    assert pointer in err


def test_unreadable_job_file(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{", encoding="utf-8")
    assert _run(capsys, "run", str(bad))[0] == 2
    assert _run(capsys, "run", str(tmp_path / "missing.json"))[0] == 2


def test_not_square_zero_is_an_algebraic_error(capsys, tmp_path):
    spec = _write_job(tmp_path, {"schema": 1, "command": "res-dm", "ring": DEGREE_TWO_RING,
                                  "payload": {"dm": {"degree": [1], "twists": [[0], [0]],
                                                     "del": [["x", "0"], ["0", "0"]]}}})
    code, out, err = _run(capsys, "run", str(spec))
    assert code == 3
    assert out == ""
    assert "NotSquareZero" in err


def test_exhausted_budget_still_reports(capsys, tmp_path):
    doc = json.loads((CORPUS / "res_dm_degree_two.json").read_text(encoding="utf-8"))
    doc["options"] = {"maxIter": 1, "format": "json"}
    code, out, err = _run(capsys, "run", str(_write_job(tmp_path, doc)))
    assert code == 4
    assert json.loads(out)["status"] == "truncated"
    assert "partial" in err

    doc["options"] = {"maxIter": 1}
    code, out, _ = _run(capsys, "run", str(_write_job(tmp_path, doc)))
    assert code == 4
    assert out.startswith("== res-dm (truncated)")


def test_list(capsys):
    code, out, _ = _run(capsys, "list")
    assert code == 0
    for command in ("res-dm", "minimize-dm", "res-min-flag", "toric-ll", "toric-rr", "linear-strand",
                    "free-res", "ext", "graded-piece"):
        assert command in out


def test_subcommand_flags(capsys, tmp_path):
    module = tmp_path / "m.json"
    module.write_text(json.dumps({"relations": [["x_0"]]}), encoding="utf-8")
    code, out, _ = _run(capsys, "toric-rr", "--builtin", "hirzebruch", "3", "--module", str(module),
                        "--format", "json")
    assert code == 0
    assert json.loads(out)["summary"]["rank"] == 5


def test_subcommand_with_ring_file(capsys, tmp_path):
    ring = tmp_path / "ring.json"
    ring.write_text(json.dumps(DEGREE_TWO_RING), encoding="utf-8")
    dm = tmp_path / "dm.json"
    dm.write_text(json.dumps({"degree": [2], "twists": [[0], [0]],
                              "del": [["x*y", "-x^2"], ["y^2", "-x*y"]]}), encoding="utf-8")
    code, out, _ = _run(capsys, "res-dm", "--ring", str(ring), "--dm", str(dm), "--max-iter", "5",
                        "--format", "json")
    assert code == 0
    assert json.loads(out)["summary"]["iterations"] == 3


def test_subcommand_bad_field(capsys, tmp_path):
    module = tmp_path / "m.json"
    module.write_text(json.dumps({"residue_field": True}), encoding="utf-8")
    code, _, err = _run(capsys, "linear-strand", "--builtin", "standard", "2", "--field", "ZZ/4",
                        "--module", str(module))
    assert code == 2
    assert "/ring/field" in err


def test_usage_errors(capsys):
    assert _run(capsys, "resolve")[0] == 2
    assert _run(capsys, "toric-rr")[0] == 2
    assert _run(capsys, "res-dm", "--builtin", "standard", "1", "--max-iter", "-1")[0] == 2


def test_free_res_ext_and_graded_piece(capsys, tmp_path):
    module = tmp_path / "k.json"
    module.write_text(json.dumps({"residue_field": True}), encoding="utf-8")
    ring = ("--builtin", "standard", "1")

    code, out, _ = _run(capsys, "free-res", *ring, "--module", str(module), "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["status"] == "ok"
    assert report["summary"]["ranks"] == {"0": 1, "1": 2, "2": 1}

    code, out, _ = _run(capsys, "ext", *ring, "--module", str(module), "--index", "2", "--format", "json")
    assert code == 0
    assert json.loads(out)["summary"] == {"generators": 1, "degrees": [[-2]]}

    payload = tmp_path / "payload.json"
    payload.write_text(json.dumps({"degrees": [[0], [1]]}), encoding="utf-8")
    code, out, _ = _run(capsys, "graded-piece", *ring, "--module", str(module), "--payload", str(payload),
                        "--format", "json")
    assert code == 0
    assert json.loads(out)["summary"]["dims"] == [{"degree": [0], "dim": 1}, {"degree": [1], "dim": 0}]
