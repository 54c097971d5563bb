"""Command-line interface: compute, sweep and verify."""
import json

import pytest

from parahiggs import cli, strata
from parahiggs.weights import DistributionCase as C

EX1_FLAGS = ["--genus", "1", "--deg-a", "0", "--deg-b", "0",
             "--alpha1", "1/10", "--alpha2", "1/2", "--eta", "6/10"]


def run(argv, capsys):
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_json(capsys):
    code, out, _ = run(EX1_FLAGS + ["--method", "both", "--format", "json"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["poincare"] == [1, 4, 7, 6, 2]
    assert data["case"] == "S3b" and data["tau"] == "-2/5"
    assert data["input"]["points"][0]["eta"] == "3/5"


def test_compute_explicit_subcommand_and_formats(capsys):
    code, out, _ = run(["compute"] + EX1_FLAGS + ["--format", "csv"], capsys)
    assert code == 0
    header, row = out.strip().splitlines()
    assert header.split(",")[:3] == ["g", "a", "b"]
    assert "1 4 7 6 2" in row
    code, out, _ = run(EX1_FLAGS + ["--format", "text"], capsys)
    assert code == 0 and "1 + 4*t + 7*t^2 + 6*t^3 + 2*t^4" in out


@pytest.mark.parametrize("method", ["closed", "direct"])
def test_compute_single_method(method, capsys):
    code, out, _ = run(EX1_FLAGS + ["--method", method], capsys)
    assert code == 0 and json.loads(out)["betti"] == [1, 4, 7, 6, 2]


def test_direct_flags(capsys):
    code, out, _ = run(EX1_FLAGS + ["--method", "direct", "--jacobian", "on"], capsys)
    assert code == 0 and json.loads(out)["n111"] == [0, 0, 1, 4, 6, 4, 1]
    code, _, err = run(EX1_FLAGS + ["--jacobian", "on"], capsys)
    assert code == 1 and "--method direct" in err


def test_punctures(capsys):
    code, out, _ = run(EX1_FLAGS + ["--punctures", "2"], capsys)
    data = json.loads(out)
    assert code == 0 and data["assembly"] is None and len(data["input"]["points"]) == 2


@pytest.mark.parametrize("change,expected", [
    (["--deg-a", "1", "--deg-b", "1"], "UnsupportedDelta: Δ=2 not ≡ 0 (mod 3)"),
    (["--alpha1", "1/4", "--alpha2", "1/2", "--eta", "3/4"], "UnclassifiableWeights: η−α₂ = α₂−α₁"),
    (["--alpha1", "3/10", "--alpha2", "3/10", "--eta", "3/10"], "NonGenericWeights"),
    (["--alpha1", "0.1"], "InvalidWeights"),
])
def test_validation_exit_code(change, expected, capsys):
    code, out, err = run(EX1_FLAGS + change, capsys)
    assert code == 2 and expected in err and out == ""


@pytest.mark.parametrize("argv", [[], ["--genus", "1"], EX1_FLAGS + ["--format", "xml"],
                                  EX1_FLAGS + ["--jacobian", "maybe"], ["frobnicate"]])
def test_usage_errors(argv, capsys):
    assert run(argv, capsys)[0] == 1


def _config(tmp_path, **kw):
    cfg = {"genus": [1], "degrees": [[0, 0]],
           "points": [{"alpha1": "1/10", "alpha2": "1/2", "eta": "6/10"}]}
    cfg.update(kw)
    path = tmp_path / "sweep.json"
    path.write_text(json.dumps(cfg))
    return str(path)


def test_sweep_mixed_rows(tmp_path, capsys):
    path = _config(tmp_path, degrees=[[0, 0], [1, 1], [-1, 1]],
                   points=[{"alpha1": "1/10", "alpha2": "1/2", "eta": "6/10"},
                           {"alpha1": "1/10", "alpha2": "1/2", "eta": "1/2"}])
    code, out, _ = run(["sweep", path], capsys)
    rows = json.loads(out)
    assert code == 0 and len(rows) == 6
    assert [r["betti"] for r in rows[:2]] == [[1, 4, 7, 6, 2], [1, 4, 7, 4, 1]]
    assert rows[2]["error"].startswith("UnsupportedDelta") and rows[3]["betti"] is None
    assert all(r["methods_agree"] for r in rows[:2])
    assert [(r["a"], r["b"]) for r in rows] == [(0, 0)] * 2 + [(1, 1)] * 2 + [(-1, 1)] * 2


def test_sweep_csv_and_empty(tmp_path, capsys):
    code, out, _ = run(["sweep", _config(tmp_path), "--format", "csv"], capsys)
    assert code == 0 and "1 4 7 6 2" in out
    code, out, _ = run(["sweep", _config(tmp_path, points=[])], capsys)
    assert code == 0 and json.loads(out) == []


def test_sweep_bad_config(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(["sweep", str(bad)], capsys)[0] == 1
    assert run(["sweep", _config(tmp_path, method="fast")], capsys)[0] == 1
    assert run(["sweep", _config(tmp_path, colour="red")], capsys)[0] == 1
    assert run(["sweep", str(tmp_path / "missing.json")], capsys)[0] == 1


def test_verify_default(capsys):
    code, out, _ = run(["verify"], capsys)
    assert code == 0 and out.strip().endswith(": ok")


def test_verify_worked_examples(capsys):
    code, out, _ = run(["verify", "--worked-examples"], capsys)
    assert code == 0 and "checked 2 inputs" in out


def test_verify_detects_corrupted_table(monkeypatch, capsys):
    broken = dict(strata.CLOSED_FORMS_111)
    broken[C.S3b] = broken[C.S2]
    monkeypatch.setattr(strata, "CLOSED_FORMS_111", broken)
    code, out, _ = run(["verify", "--genus", "1"], capsys)
    assert code == 3
    assert "FAIL n111 closed = direct" in out and "closed: " in out and "direct: " in out


def test_compute_reports_mismatch(monkeypatch, capsys):
    broken = dict(strata.CLOSED_FORMS_111)
    broken[C.S3b] = broken[C.S2]
    monkeypatch.setattr(strata, "CLOSED_FORMS_111", broken)
    code, _, err = run(EX1_FLAGS, capsys)
    assert code == 3 and err.startswith("MethodMismatch")


def test_module_entry_point_exit_codes():
    import subprocess
    import sys
    base = [sys.executable, "-m", "parahiggs"]
    ok = subprocess.run(base + EX1_FLAGS, capture_output=True, text=True)
    assert ok.returncode == 0 and json.loads(ok.stdout)["poincare"] == [1, 4, 7, 6, 2]
    bad = subprocess.run(base + EX1_FLAGS + ["--deg-a", "1", "--deg-b", "1"],
                         capture_output=True, text=True)
    assert bad.returncode == 2 and "UnsupportedDelta" in bad.stderr
