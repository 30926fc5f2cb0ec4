import csv
import json

import pytest

from limweight.cli import main


def test_list(capsys):
    assert main(["list", "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert len(out["fixtures"]) >= 5 and "all" in out["suites"]
    assert main(["list"]) == 0


def test_verify_writes_report(tmp_path, capsys):
    report = tmp_path / "r.json"
    code = main(["verify", "heisenberg-pregroup", "--seed", "42", "--samples", "20", "--report", str(report),
                 "--no-timing"])
    assert code == 0
    data = json.loads(report.read_text())
    assert data["summary"]["passed"] and data["config"]["seed"] == 42
    assert "timing" not in data
    assert "PASS" in capsys.readouterr().out


def test_environment_overrides(tmp_path, monkeypatch):
    report = tmp_path / "env.json"
    monkeypatch.setenv("LIMWEIGHT_SEED", "5")
    monkeypatch.setenv("LIMWEIGHT_SAMPLES", "7")
    monkeypatch.setenv("LIMWEIGHT_REPORT", str(report))
    assert main(["verify", "heisenberg-descent"]) == 0
    cfg = json.loads(report.read_text())["config"]
    assert (cfg["seed"], cfg["samples"]) == (5, 7)
    assert main(["verify", "heisenberg-descent", "--seed", "6"]) == 0
    assert json.loads(report.read_text())["config"]["seed"] == 6


def test_failure_exit_code(capsys):
    assert main(["verify", "ode-group", "--tol", "ode-group=1e-20"]) == 1
    assert "FAIL" in capsys.readouterr().out


@pytest.mark.parametrize("argv", [["verify", "nope"], ["verify", "novikov", "--fixture", "missing"],
                                  ["ode", "run", "--fixture", "heisenberg-rb"]])
def test_usage_errors_exit_two(argv, capsys):
    assert main(argv) == 2
    assert "error:" in capsys.readouterr().err


def test_bad_env_value(monkeypatch):
    monkeypatch.setenv("LIMWEIGHT_SAMPLES", "many")
    assert main(["verify", "tangent"]) == 2


def test_bad_tolerance_flag():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "tangent", "--tol", "speed=3"])
    assert exc.value.code == 2


def test_ode_run(tmp_path, capsys):
    out_csv, out_json = tmp_path / "res.csv", tmp_path / "res.json"
    assert main(["ode", "run", "--csv", str(out_csv), "--report", str(out_json)]) == 0
    rows = list(csv.reader(out_csv.open()))
    assert rows[0] == ["check", "x", "residual"] and len(rows) > 1000
    summary = json.loads(out_json.read_text())
    assert all(p["max_residual"] <= 1e-6 for p in summary["pairs"])
    assert "max residual" in capsys.readouterr().out


def test_ode_run_bad_step():
    assert main(["ode", "run", "--h", "0.3"]) == 2


def test_verify_csv(tmp_path):
    out = tmp_path / "v.csv"
    assert main(["verify", "ode-rbivp", "--csv", str(out)]) == 0
    assert out.read_text().startswith("check,x,residual")
