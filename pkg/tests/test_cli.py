import csv
import io
import json
import subprocess
import sys

import pytest

from pinch_rsma import cli, tables
from pinch_rsma.closed_form import outage_triple
from pinch_rsma.model import SystemConfig
from pinch_rsma.oracles import THREADS_ENV


def _csv(text: str):
    body = [line for line in text.splitlines() if not line.startswith("#")]
    return list(csv.DictReader(io.StringIO("\n".join(body))))


def test_eval_defaults_human_readable():
    code, out, err = cli.run_cli(["eval"])
    assert code == 0 and err == ""
    t = outage_triple(SystemConfig())
    for branch in t[3:]:
        assert branch in out
    assert f"{t.p_x1a:.6g}" in out
    assert "tx_snr_gamma1" in out


def test_eval_csv_full_precision():
    code, out, _ = cli.run_cli(["eval", "--format", "csv", "--with-quad"])
    assert code == 0
    rows = _csv(out)
    assert [r["message"] for r in rows] == list(tables.MESSAGES)
    t = outage_triple(SystemConfig())
    for r, p in zip(rows, t[:3]):
        assert float(r["closed_form"]) == p
        assert abs(float(r["quad"]) - p) < 1e-10
    assert "# tx_snr_db = 85.0" in out


def test_eval_json_echoes_config():
    code, out, _ = cli.run_cli(["eval", "--format", "json", "--alpha", "0.6", "--rate-r2", "0.8"])
    doc = json.loads(out)
    assert code == 0 and doc["command"] == "eval"
    assert doc["config"]["alpha"] == 0.6 and doc["config"]["rate_r2"] == 0.8
    t = outage_triple(SystemConfig().with_rsma(alpha=0.6, rate_r2=0.8))
    assert [r["closed_form"] for r in doc["rows"]] == list(t[:3])


def test_eval_mc_is_deterministic(monkeypatch):
    argv = ["eval", "--with-mc", "--seed", "42", "--mc-samples", "200000", "--format", "csv"]
    outs = set()
    for threads in ("1", "4", "16", "1"):
        monkeypatch.setenv(THREADS_ENV, threads)
        code, out, _ = cli.run_cli(argv)
        assert code == 0
        outs.add(out)
    assert len(outs) == 1
    rows = _csv(outs.pop())
    for r in rows:
        assert abs(float(r["mc"]) - float(r["closed_form"])) <= 4 * float(r["mc_std_error"]) + 1e-12


def test_config_file_and_override_precedence(tmp_path):
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps({"tx_snr_db": 80.0, "alpha": 0.5}))
    code, out, _ = cli.run_cli(["eval", "--config", str(path), "--alpha", "0.9", "--format", "json"])
    cfg = json.loads(out)["config"]
    assert code == 0 and cfg["tx_snr_db"] == 80.0 and cfg["alpha"] == 0.9


def test_unknown_key_reports_line(tmp_path):
    path = tmp_path / "cfg.json"
    path.write_text('{\n  "alpha": 0.5,\n  "snr": 80\n}\n')
    code, out, err = cli.run_cli(["eval", "--config", str(path)])
    assert code == 2 and out == ""
    assert f"{path}:3" in err and "'snr'" in err


def test_malformed_json_reports_position(tmp_path):
    path = tmp_path / "cfg.json"
    path.write_text('{\n  "alpha": 0.5,\n  "beta": \n}\n')
    code, _, err = cli.run_cli(["eval", "--config", str(path)])
    assert code == 2 and f"{path}:4" in err


@pytest.mark.parametrize("argv", [
    ["eval", "--alpha", "1.5"],
    ["eval", "--tol", "0"],
    ["eval", "--seed", "-3"],
    ["eval", "--height-d-m", "0"],
    ["eval", "--mc-samples", "0"],
    ["eval", "--no-such-flag"],
    ["frobnicate"],
    ["validate", "0"],
    ["eval", "--config", "/nonexistent/cfg.json"],
])
def test_config_errors_exit_2(argv):
    code, out, err = cli.run_cli(argv)
    assert code == 2 and out == "" and err.startswith("error:")


def test_unwritable_output_exits_3(tmp_path):
    code, _, err = cli.run_cli(["eval", "--out", str(tmp_path / "missing" / "x.csv")])
    assert code == 3 and "I/O error" in err


def test_out_writes_file(tmp_path):
    path = tmp_path / "eval.csv"
    code, out, _ = cli.run_cli(["eval", "--format", "csv", "--out", str(path)])
    assert code == 0 and out == ""
    assert path.read_text() == cli.run_cli(["eval", "--format", "csv"])[1]


def test_validate_report_schema():
    code, out, _ = cli.run_cli(["validate", "20", "--seed", "7"])
    assert code == 0
    rows = _csv(out)
    assert len(rows) == len(tables.ROWS) + len(tables.SUPPLEMENTARY_ROWS)
    assert set(rows[0]) == {"row_id", "hits", "max_abs_error", "status", "unreachable_reason",
                            "literal_divergences"}
    assert sum(int(r["hits"]) for r in rows) == 3 * 20
    unreachable = [r for r in rows if r["status"] == "unreachable"]
    assert unreachable and all(r["unreachable_reason"] for r in unreachable)
    assert max(float(r["max_abs_error"]) for r in rows if r["max_abs_error"]) <= cli.VALIDATION_TOL
    assert "# no-match 0; multi-match 0" in out


def test_validate_literal_mode_flags_divergence():
    code, out, _ = cli.run_cli(["validate", "--n-random", "60", "--paper-literal"])
    assert code == 1
    assert any(int(r["literal_divergences"]) for r in _csv(out))


def test_sweep_snr_columns():
    code, out, _ = cli.run_cli(["sweep", "--kind", "snr", "--no-optimize", "--snr-start-db", "80",
                                "--snr-stop-db", "82"])
    assert code == 0
    rows = _csv(out)
    assert list(rows[0]) == cli.SNR_COLUMNS
    assert [float(r["snr_db"]) for r in rows] == [80.0, 81.0, 82.0]
    for r in rows:
        t = outage_triple(SystemConfig().with_snr_db(float(r["snr_db"])))
        assert float(r["p_x2a"]) == t.p_x2a


def test_sweep_alpha_fixed_beta():
    code, out, _ = cli.run_cli(["sweep", "--kind", "alpha", "--no-optimize-beta", "--alpha-step", "0.25"])
    rows = _csv(out)
    assert code == 0 and len(rows) == 2 * 5
    assert {r["beta"] for r in rows} == {"0.5"}


def test_sweep_capacity(tmp_path):
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps({"placements": [[1.0, 2.0]], "n_alpha": 3}))
    code, out, _ = cli.run_cli(["sweep", "--kind", "capacity", "--config", str(path)])
    rows = _csv(out)
    assert code == 0
    assert [r["kind"] for r in rows] == ["vertex"] * 5 + ["trace"] * 3


def test_bad_placement_is_config_error(tmp_path):
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps({"placements": [[1.0]]}))
    code, _, _ = cli.run_cli(["sweep", "--kind", "capacity", "--config", str(path)])
    assert code == 2


def test_optimize_command():
    code, out, _ = cli.run_cli(["optimize", "--tx-snr-db", "80", "--format", "json"])
    (row,) = json.loads(out)["rows"]
    assert code == 0
    assert 0 <= row["alpha_star"] <= 1 and row["p_x2a"] <= row["p_noma_system"]


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "pinch_rsma.cli", "eval", "--format", "csv"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout == cli.run_cli(["eval", "--format", "csv"])[1]
