import csv
import io
import json

import pytest

from lukas import cli, reference


def run(capsys, *argv):
    code = cli.run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classes_plain_count(capsys):
    code, out, _ = run(capsys, "classes", "--length", "4", "--pattern", "FF")
    assert code == 0 and out == "5\n"


def test_classes_csv_header(capsys):
    code, out, _ = run(capsys, "classes", "--length", "4", "--pattern", "FF", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0
    assert rows[0] == ["n", "relation", "method", "count"]
    assert rows[1] == ["4", "FF", "oracle", "5"]


def test_classes_json_round_trip(capsys):
    code, out, _ = run(capsys, "classes", "--max-length", "3", "--pattern", "D", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data == [
        {"n": 1, "relation": "D", "method": "oracle", "count": 1},
        {"n": 2, "relation": "D", "method": "oracle", "count": 2},
        {"n": 3, "relation": "D", "method": "oracle", "count": 4},
    ]


def test_enumerate_motzkin(capsys):
    code, out, _ = run(capsys, "enumerate", "--length", "3", "--family", "motzkin")
    assert code == 0
    assert out.splitlines() == ["FFF", "FUD", "UDF", "UFD"]


def test_enumerate_subset_filter(capsys):
    code, out, _ = run(capsys, "enumerate", "--length", "3", "--set", "B")
    assert code == 0
    assert out.splitlines() == ["FFF", "FUD", "UDF", "U2DD"]


def test_map_psi_example(capsys):
    code, out, _ = run(capsys, "map", "--name", "psi", "--path", "U2DD")
    assert code == 0 and out == "UFD\n"


def test_map_runs_needs_pattern(capsys):
    code, _, err = run(capsys, "map", "--name", "runs", "--path", "FUD")
    assert code == 2 and "runs" in err
    code, out, _ = run(capsys, "map", "--name", "runs", "--pattern", "FU", "--path", "FUD")
    assert code == 0 and out.strip()


def test_canon_projection(capsys):
    code, out, _ = run(capsys, "canon", "--pattern", "FF", "--path", "U2DFFDF")
    assert code == 0 and out == "U3DFFDD\n"


def test_witness(capsys):
    code, out, _ = run(capsys, "witness", "--pattern", "DD", "--length", "6",
                       "--positions", "2,5")
    assert code == 0 and out == "U4DDFDD\n"


def test_series_csv(capsys):
    code, out, _ = run(capsys, "series", "--tag", "UD", "--terms", "5",
                       "--method", "closed", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0
    assert rows[0] == ["n", "tag", "method", "value"]
    assert [r[3] for r in rows[1:]] == ["1", "1", "2", "3", "5", "8"]


def test_series_family_tag(capsys):
    code, out, _ = run(capsys, "series", "--tag", "B", "--terms", "6")
    assert code == 0
    assert out.splitlines() == ["1", "1", "2", "4", "9", "21", "51"]


def test_verify_passes_and_is_deterministic(capsys):
    code1, out1, err1 = run(capsys, "verify", "--max-length", "6", "--format", "csv")
    code2, out2, _ = run(capsys, "verify", "--max-length", "6", "--format", "csv")
    assert code1 == code2 == 0
    assert out1 == out2
    rows = list(csv.reader(io.StringIO(out1)))
    assert rows[0] == ["n", "relation", "method", "value", "reference", "pass"]
    assert all(r[5] == "True" for r in rows[1:])
    assert "oracle sweep" in err1  # progress stays on the diagnostic stream


def test_verify_detects_mismatch(capsys, monkeypatch):
    monkeypatch.setitem(reference.TABLE1, "F", (1, 2, 5, 12, 27, 999, 121, 248, 503, 1014))
    code, out, _ = run(capsys, "verify", "--max-length", "6", "--pattern", "F", "--format", "csv")
    assert code == 1
    assert any("False" in line for line in out.splitlines())


def test_verify_json_round_trip(capsys):
    code, out, _ = run(capsys, "verify", "--max-length", "4", "--pattern", "DD",
                       "--format", "json")
    data = json.loads(out)
    assert code == 0 and all(r["pass"] for r in data)


def test_usage_errors_exit_2(capsys):
    assert run(capsys, "map", "--name", "nosuch", "--path", "F")[0] == 2
    assert run(capsys, "map", "--name", "psi", "--path", "UX")[0] == 2
    assert run(capsys, "classes", "--length", "3", "--pattern", "ZZ")[0] == 2
    assert run(capsys, "witness", "--pattern", "DD", "--length", "6",
               "--positions", "2,4")[0] == 2
    assert run(capsys, "classes", "--pattern", "F")[0] == 2
    assert run(capsys, "nosuchcommand")[0] == 2


def test_oracle_bound_flag_and_env(capsys, monkeypatch):
    assert run(capsys, "classes", "--length", "5", "--pattern", "F",
               "--oracle-bound", "4")[0] == 2
    monkeypatch.setenv("LUKAS_ORACLE_BOUND", "4")
    assert run(capsys, "classes", "--length", "5", "--pattern", "F")[0] == 2
    assert run(capsys, "classes", "--length", "4", "--pattern", "F")[0] == 0
