import csv
import json

import pytest

from gpar.cli import main


def test_gen_dot(capsys):
    assert main(["gen", "--n", "5", "--k", "2", "--format", "dot"]) == 0
    out = capsys.readouterr().out
    assert out.count("[label=") == 10 and out.count("--") == 15


def test_gen_normalizes(capsys):
    assert main(["gen", "--n", "10", "--k", "8"]) == 0
    cap = capsys.readouterr()
    data = json.loads(cap.out)
    assert any(e["label"] == "v0v2" for e in data["edges"])


def test_gen_invalid(capsys):
    assert main(["gen", "--n", "10", "--k", "5"]) == 2
    assert "1 <= k <= 4" in capsys.readouterr().err


def test_ar(capsys, tmp_path):
    out = tmp_path / "r.json"
    assert main(["ar", "--n", "8", "--k", "3", "--d", "6", "--out", str(out)]) == 0
    assert "= 17" in capsys.readouterr().out
    assert json.loads(out.read_text())["value"] == 17


@pytest.mark.parametrize("n,k,d,value", [(10, 2, 5, 22), (7, 2, 5, 16)])
def test_ar_values(capsys, n, k, d, value):
    assert main(["ar", "--n", str(n), "--k", str(k), "--d", str(d)]) == 0
    assert f"= {value} " in capsys.readouterr().out


def test_ar_budget_exit(capsys):
    assert main(["ar", "--n", "10", "--k", "3", "--d", "6", "--budget", "3"]) == 3
    assert "bracket" in capsys.readouterr().err


def test_ar_bad_length():
    assert main(["ar", "--n", "10", "--k", "3", "--d", "7"]) == 2


def test_verify_theorems(tmp_path, capsys):
    report = tmp_path / "t.csv"
    assert main(["verify-theorems", "--d", "5", "--n-max", "12", "--jobs", "1",
                 "--report", str(report)]) == 0
    rows = list(csv.DictReader(report.open()))
    assert list(rows[0]) == ["n", "k", "d", "closed_form", "computed", "method", "millis",
                             "agree"]
    got = {(r["n"], r["k"]): r["computed"] for r in rows}
    assert got[("5", "1")] == "13" and got[("5", "2")] == "10" and got[("10", "2")] == "22"
    assert all(r["agree"] == "true" for r in rows)


def test_verify_theorems_single_row(capsys):
    assert main(["verify-theorems", "--d", "6", "--n-max", "3", "--jobs", "1"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[1].startswith("3,1,6,7,7,")


def test_verify_theorems_c6_rows(tmp_path):
    report = tmp_path / "t.csv"
    assert main(["verify-theorems", "--d", "6", "--n-max", "12", "--jobs", "1",
                 "--report", str(report)]) == 0
    got = {(r["n"], r["k"]): r["computed"] for r in csv.DictReader(report.open())}
    assert got[("4", "1")] == "9" and got[("6", "1")] == "14" and got[("12", "2")] == "34"


def test_coloring_check(capsys):
    assert main(["coloring", "--lemma", "3.16", "--n", "10", "--k", "3", "--check"]) == 0
    cap = capsys.readouterr()
    assert json.loads(cap.out)["colors"] == 22 and "ok" in cap.err


def test_coloring_out_of_range(capsys):
    assert main(["coloring", "--lemma", "3.1", "--n", "5", "--k", "1"]) == 2


def test_coloring_3_18(capsys):
    assert main(["coloring", "--lemma", "3.18", "--n", "9", "--k", "3", "--check"]) == 0
    assert json.loads(capsys.readouterr().out)["colors"] == 22


def test_bad_flags():
    assert main(["ar", "--n", "x"]) == 2
    assert main([]) == 2


def test_env_budget(monkeypatch, capsys):
    monkeypatch.setenv("GPAR_NODE_BUDGET", "3")
    assert main(["ar", "--n", "8", "--k", "3", "--d", "6"]) == 3
