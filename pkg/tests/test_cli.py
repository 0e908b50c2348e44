import csv
import io
import json

import pytest

from ruvcodes.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_distance_json(capsys):
    code, out, _ = run(capsys, "distance", "--type", "B", "--ell", "4", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert (doc["eta_exponent"], doc["d_h"], doc["d_sp"]) == (4, 2, 4)
    assert doc["generator"] == "<u(x^2-2)^4>"
    code, out, _ = run(capsys, "distance", "--type", "A1", "--format", "json")
    doc = json.loads(out)
    assert (doc["eta_exponent"], doc["d_h"], doc["d_sp"]) == (24, 1, 2)


def test_distance_bound_violation(capsys):
    code, _, err = run(capsys, "distance", "--type", "C", "--ell", "2", "--t", "3")
    assert code == 2
    assert "0 <= t < ell" in err


def test_distance_oracle(capsys):
    code, out, _ = run(capsys, "distance", "--type", "C", "--ell", "5", "--t", "4", "--z", "1", "--oracle", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["oracle"]["d_h"]["value"] == 3 and doc["oracle"]["d_sp"]["value"] == 6
    assert doc["source"] == "both"


def test_distance_oracle_only_for_uncovered(capsys):
    code, _, _ = run(capsys, "distance", "--alpha", "2", "--type", "B", "--ell", "1")
    assert code == 2
    code, out, _ = run(capsys, "distance", "--alpha", "2", "--type", "B", "--ell", "1", "--oracle", "--format", "json")
    assert code == 0
    assert json.loads(out)["source"] == "oracle"


def test_classify(capsys):
    code, out, _ = run(capsys, "classify")
    assert code == 0 and out.startswith("alpha = 2+v+uv: CaseNoU")
    assert "total=85" in out
    code, out, _ = run(capsys, "classify", "--alpha", "1")
    assert "Square" in out and "gamma = 1" in out and "-gamma = 2" in out and "length 3" in out
    code, out, _ = run(capsys, "classify", "--alpha", "2")
    assert code == 0 and "Uncovered" in out


def test_table_row_count_and_footnote(capsys):
    code, out, _ = run(capsys, "table", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and len(doc["rows"]) == 85
    foot = [r for r in doc["rows"] if "footnote" in r]
    assert len(foot) == 1 and foot[0]["generator"] == "<(x^2-2)+uz(x), u>" and foot[0]["d_sp"] == 2
    code, out, _ = run(capsys, "table")
    assert "| <(x^2-2)+uz(x), u> | 3^22 | 1 | 2[^1] |" in out
    assert "[^1]:" in out


def test_table_csv_columns(capsys):
    _, out, _ = run(capsys, "table", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["type", "ell", "t", "mu", "z", "eta_exponent", "d_h", "d_sp", "im", "provenance", "source"]
    assert len(rows) == 86


@pytest.mark.parametrize("fmt", ["csv", "json"])
def test_output_deterministic(capsys, fmt):
    argv = ["table", "--format", fmt, "--z-policy", "random", "--samples", "2", "--seed", "9"]
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    assert a == b


def test_table_uncovered(capsys):
    code, _, err = run(capsys, "table", "--alpha", "2")
    assert code == 2 and "Uncovered" in err


def test_field_info(capsys):
    code, out, _ = run(capsys, "field-info", "--format", "json")
    doc = json.loads(out)
    assert doc["field"] == "GF(3^1; irreducible=0,1)"
    assert doc["alpha0"] == "2" and doc["nilpotency_index"] == 6 and doc["alpha1_is_square"] is False


def test_config_file_and_override(capsys, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# example\np = 3\nalpha = 2+v+uv\ntype = B\nell = 5\nformat = json\n")
    _, out, _ = run(capsys, "distance", "--config", str(cfg))
    assert json.loads(out)["d_h"] == 3
    _, out, _ = run(capsys, "distance", "--config", str(cfg), "--ell", "4")
    assert json.loads(out)["d_h"] == 2
    bad = tmp_path / "bad.cfg"
    bad.write_text("colour = blue\n")
    code, _, _ = run(capsys, "distance", "--config", str(bad), "--type", "A1")
    assert code == 2


def test_out_file(capsys, tmp_path):
    target = tmp_path / "t.md"
    code, out, _ = run(capsys, "table", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text().count("\n| <") == 85


def test_usage_errors(capsys):
    assert run(capsys, "distance")[0] == 2
    assert run(capsys, "nonsense")[0] == 2
    assert run(capsys, "classify", "--alpha", "2+w")[0] == 2
    assert run(capsys, "classify", "--p", "4")[0] == 2
    assert run(capsys, "classify", "--alpha", "u")[0] == 2


def test_verify_base_field(capsys):
    code, out, _ = run(capsys, "verify", "--base-field", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["summary"]["PASS"] == 4


def test_verify_budget_exit(capsys):
    code, out, _ = run(capsys, "verify", "--z-policy", "zero-only", "--cap", "1", "--node-limit", "1")
    assert code == 3
    assert "SKIPPED" in out
