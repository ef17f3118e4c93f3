from __future__ import annotations

import json

import pytest

from qcc.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture(autouse=True)
def isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("QCC_CACHE_DIR", str(tmp_path / "cache"))


def test_qnc_k5(capsys):
    code, out, _ = run(capsys, "qnc", "--n", "5", "--c", "5")
    assert code == 0
    assert "= 5" in out and "D~{" in out
    code, out, _ = run(capsys, "qnc", "--n", "5", "--c", "5", "--format", "g6")
    assert out == "D~{\n"


def test_omega_brute(capsys):
    code, out, _ = run(capsys, "--format", "json", "omega", "--n", "5", "--k", "2", "--brute")
    data = json.loads(out)
    assert code == 0 and data["value"] == [2, 2] and data["witness_g6"]


def test_ramsey(capsys):
    code, out, _ = run(capsys, "ramsey", "--s", "3", "--t", "3")
    assert code == 0 and out.splitlines()[0] == "[6,6] exact"


def test_qnc_table_csv(capsys):
    code, out, _ = run(capsys, "qnc", "--n-max", "4")
    lines = out.splitlines()
    assert lines[0] == "n,c,Q,witness_g6,method"
    assert len(lines) == 1 + 10


def test_formula_and_partitions(capsys):
    assert run(capsys, "qnc", "--n", "9", "--c", "6", "--method", "formula")[1].startswith("Q(9,6) = 5")
    assert "partition: 3" in run(capsys, "qsmall", "--k", "3")[1]
    assert run(capsys, "qgen", "--beta", "4", "--alpha", "2")[1].startswith("[3,3] exact")


def test_usage_errors(capsys):
    assert run(capsys, "qnc", "--n", "6", "--c", "4", "--method", "formula")[0] == 2
    assert run(capsys, "qnc", "--n", "3", "--c", "5")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["construct", "--r", "0.4", "--n", "10"])
    assert exc.value.code == 2
    assert "exact fraction" in capsys.readouterr().err


def test_construct(tmp_path, capsys):
    out_file = tmp_path / "g.g6"
    code, out, _ = run(capsys, "construct", "--r", "2/5", "--n", "20", "--kind", "join", "--out", str(out_file))
    data = json.loads(out)
    assert code == 0 and data["chi"] == 8 and data["omega"] == 6
    assert out_file.read_text().strip() == data["graph6"]


def test_verify_writes_report_and_figure(tmp_path, capsys):
    report = tmp_path / "out" / "report.csv"
    code, out, _ = run(capsys, "verify", "--r", "1/2,2/5", "--n-max", "6", "--out", str(report))
    assert code == 0 and "passed=True" in out
    assert report.read_text().startswith("r,n,k,c,")
    assert report.with_suffix(".png").stat().st_size > 0


def test_verify_serial_parallel_identical(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path, threads in ((a, "1"), (b, "2")):
        code, _, _ = run(capsys, "--format", "json", "--threads", threads, "verify", "--r", "3/5",
                         "--n-max", "7", "--out", str(path), "--no-plot")
        assert code == 0
    assert a.read_bytes() == b.read_bytes()


def test_constants(tmp_path, capsys):
    out = tmp_path / "c.csv"
    assert run(capsys, "constants", "--k-max", "2", "--points", "4", "--out", str(out))[0] == 0
    rows = out.read_text().splitlines()
    assert rows[0] == "r,k,c_r,d_r,c_r_float" and len(rows) == 9
    assert "1/2,2,1/4,1/4,0.250000" in rows
