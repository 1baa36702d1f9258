import json

import pytest

import main
from app.database import recent_runs
from app.documents import parse_input
from app.errors import InvariantViolationError

TRIANGLE_DOC = '{"segments": [[[0, 0], [4, 0]], [[4, 0], [0, 4]], [[0, 4], [0, 0]]]}'
FIXISO_DOC = '{"segments": [[[2, 0], [2, 2]], [[-2, -2], [2, -2]], [[-2, 2], [-2, 0]]]}'


def test_coverage_of_triangle(write_doc, capsys):
    assert main.main(["coverage", write_doc(TRIANGLE_DOC)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert [r["area"] for r in out["regions"]] == ["8"]
    assert "timings" not in out["stats"]


def test_coverage_of_fixiso_with_stats(write_doc, capsys):
    assert main.main(["coverage", write_doc(FIXISO_DOC), "--stats"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["regions"] == []
    assert ["0", "0"] in out["isolated_points"]
    assert "timings" in out["stats"]


def test_coverage_writes_files(write_doc, tmp_path):
    out_path, svg_path = tmp_path / "out.json", tmp_path / "out.svg"
    code = main.cmd_coverage(write_doc(TRIANGLE_DOC), str(out_path), str(svg_path))
    assert code == 0
    assert json.loads(out_path.read_text())["stats"]["regions"] == 1
    svg = svg_path.read_text()
    assert svg.startswith("<svg") and "<polygon" in svg and svg.count("<line") == 3


def test_malformed_coordinate_exits_with_1(write_doc, caplog):
    path = write_doc('{"segments": [[[0, 0], ["1/0", 1]]]}')
    assert main.cmd_coverage(path) == 1
    assert "1/0" in caplog.text


def test_validation_error_exits_with_1(write_doc, caplog):
    assert main.cmd_coverage(write_doc('{"segments": [[[1, 1], [1, 1]]]}')) == 1
    assert "segment 0" in caplog.text


def test_undecodable_bytes_exit_with_1(tmp_path, caplog):
    path = tmp_path / "latin1.json"
    path.write_bytes(b'{"segments": [[[0,0],[4,0]]], "note": "\xff\xfe"}')
    assert main.cmd_coverage(str(path)) == 1
    assert main.cmd_query(str(path), "1,1") == 1
    assert "not valid UTF-8 at byte 39" in caplog.text


def test_missing_file_exits_with_1(tmp_path):
    assert main.cmd_coverage(str(tmp_path / "missing.json")) == 1


def test_invariant_violation_exits_with_2(write_doc, monkeypatch):
    def broken(barrier, with_timings=False):
        raise InvariantViolationError("boom")
    monkeypatch.setattr(main, "compute_coverage", broken)
    assert main.cmd_coverage(write_doc(TRIANGLE_DOC)) == 2


@pytest.mark.parametrize("doc, point, expected", [
    (TRIANGLE_DOC, "1,1", "blocked"),
    (FIXISO_DOC, "0,0", "blocked"),
    (FIXISO_DOC, "1/50,1/100", "clear"),
])
def test_query(write_doc, capsys, doc, point, expected):
    assert main.main(["query", write_doc(doc), "--point", point]) == 0
    assert capsys.readouterr().out.split()[0] == expected


def test_query_far_point_prints_witness(write_doc, capsys):
    assert main.cmd_query(write_doc(TRIANGLE_DOC), "100,100") == 0
    verdict, witness = capsys.readouterr().out.split()
    assert verdict == "clear" and "," in witness


def test_query_rejects_bad_point(write_doc):
    assert main.cmd_query(write_doc(TRIANGLE_DOC), "1;1") == 1


def test_gen_ngon(capsys):
    assert main.main(["gen", "ngon", "--n", "4", "--gap", "1/10"]) == 0
    doc = parse_input(capsys.readouterr().out)
    assert doc.to_barrier().m == 4


def test_gen_rejects_zero_gap(capsys):
    assert main.main(["gen", "ngon", "--n", "4", "--gap", "0"]) == 1


def test_gen_fixiso_round_trips_through_coverage(tmp_path, capsys):
    path = tmp_path / "fixiso.json"
    assert main.cmd_gen("fixiso", output_path=str(path)) == 0
    assert main.cmd_coverage(str(path)) == 0
    assert json.loads(capsys.readouterr().out)["isolated_points"] == [["0", "0"]]


def test_selftest_command(capsys):
    assert main.main(["selftest", "--count", "0"]) == 0
    assert capsys.readouterr().out == "0 instances, 0 failed\n"
    assert main.cmd_selftest(-1, 6, 10, 0) == 1


def test_runs_are_recorded(write_doc, tmp_path, monkeypatch, capsys):
    monkeypatch.setattr("app.settings.HISTORY_DB", str(tmp_path / "runs.db"))
    path = write_doc(TRIANGLE_DOC)
    main.cmd_coverage(path)
    main.cmd_query(path, "1,1")
    runs = recent_runs()
    assert [r["kind"] for r in runs] == ["query", "coverage"]
    assert runs[1]["summary"]["regions"] == 1
    capsys.readouterr()
    assert main.main(["history"]) == 0
    assert "coverage" in capsys.readouterr().out
