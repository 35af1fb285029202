import json
import sqlite3

import pytest
from click.testing import CliRunner

from surface_beta.pipelines.writers import read_frame
from surface_beta.scripts.cli import cli


def run(*args):
    return CliRunner().invoke(cli, ["--quiet", *args], catch_exceptions=False)


def test_describe_json_and_lattice():
    res = run("describe", "--code", "3,3")
    assert res.exit_code == 0
    info = json.loads(res.stdout)
    assert info["provenance"]["subcommand"] == "describe"
    assert info["provenance"]["config"]["code"] == "3x3"
    assert (info["n"], info["k"], len(info["generators"])) == (13, 1, 12)
    assert info["logical_X"] == "X1 X6 X11"

    res = run("describe", "--code", "3,3", "--xzzx", "--lattice")
    assert res.exit_code == 0
    first, second = res.stdout.splitlines()[:2]
    assert json.loads(first.removeprefix("# provenance: "))["config"]["variant"] == "XZZX"
    assert second.startswith("# [[13,1,3]] XZZX")


def test_decode_worked_example():
    res = run("decode", "Z2 Z3")
    assert res.exit_code == 0
    out = json.loads(res.stdout)
    assert out["correction"] == "Z1"
    assert out["residual_class"] == "Z"
    assert out["success"] is False
    assert out["syndrome"] == "100000000000"
    assert "channel" not in out
    assert out["provenance"]["subcommand"] == "decode"
    assert out["provenance"]["config"]["decoder"] == "mwpm"
    assert out["provenance"]["config"]["channel"] is None


def test_decode_ml_with_channel():
    res = run("decode", "X5", "--decoder", "ml", "--rho", "0.03")
    assert res.exit_code == 0
    out = json.loads(res.stdout)
    assert out["success"] is True
    assert out["channel"]["p_X"] == pytest.approx(0.01)


@pytest.mark.parametrize(
    "args",
    [
        ("decode", "Z1", "--decoder", "ml"),
        ("decode", "Z1", "--code", "4,4"),
        ("decode", "Z1", "--rho", "0.1", "--px", "0.01"),
        ("decode", "Q1"),
        ("decode", "Z1", "--xzzx"),
        ("simulate", "--out", "x.csv"),
        ("simulate", "--rho", "0.1", "--pz", "0.1", "--out", "x.csv"),
        ("reproduce", "fig9", "out"),
    ],
)
def test_bad_input_exits_2(args):
    assert run(*args).exit_code == 2


def test_enumerate_budget_exit_3(tmp_path):
    res = run("enumerate-beta", "--code", "3,3", "--budget", "10", "--out", str(tmp_path / "b.json"))
    assert res.exit_code == 3
    assert "--allow-large" in res.output
    assert not (tmp_path / "b.json").exists()


def test_enumerate_writes_table(tmp_path):
    out = tmp_path / "b.json"
    res = run("enumerate-beta", "--code", "3,3", "-j", "2", "--out", str(out), "--table1", str(tmp_path / "t1.csv"))
    assert res.exit_code == 0
    payload = json.loads(out.read_text(encoding="utf-8"))
    assert payload["provenance"]["subcommand"] == "enumerate-beta"
    frame, _ = read_frame(tmp_path / "t1.csv")
    assert frame["1-beta_j"].iloc[0] == pytest.approx(0.24, abs=0.005)

    # the table feeds the threshold command
    thr = tmp_path / "thr.json"
    res = run("threshold", "--from-table", str(out), "-g", "0", "--out", str(thr))
    assert res.exit_code == 0
    payload = json.loads(thr.read_text(encoding="utf-8"))
    assert payload["beta_source"] == f"table:{out}"
    assert payload["provenance"]["config"]["beta_source"] == f"table:{out}"
    # enumerated 1 - beta_2 = 0.2365, not the published 0.24
    assert payload["thresholds"][0]["approx"] == pytest.approx(0.0542, rel=0.005)


def test_analytic_bounded(tmp_path):
    out = tmp_path / "bounded.csv"
    res = run("analytic", "bounded", "--rho", "0.01", "--out", str(out))
    assert res.exit_code == 0
    df, prov = read_frame(out)
    assert df["rho_L"].iloc[0] == pytest.approx(7.249e-3, rel=1e-3)
    assert prov["config"]["formula"] == "bounded"


def test_analytic_beta_needs_betas(tmp_path):
    res = run("analytic", "beta", "--out", str(tmp_path / "x.csv"))
    assert res.exit_code == 2


def test_threshold_published(tmp_path):
    out = tmp_path / "thr.json"
    res = run("threshold", "--published", "--out", str(out))
    assert res.exit_code == 0
    payload = json.loads(out.read_text(encoding="utf-8"))
    assert payload["t"] == 1
    assert [r["gamma"] for r in payload["thresholds"]] == [0.0, 1.0]
    assert payload["thresholds"][0]["approx"] == pytest.approx(0.0534, rel=0.01)
    assert payload["beta_source"] == "published"


def test_threshold_stdout_carries_provenance():
    res = run("threshold", "--betas", "0.75", "-g", "0")
    assert res.exit_code == 0
    payload = json.loads(res.stdout)
    assert payload["beta_source"] == "list"
    assert payload["provenance"]["subcommand"] == "threshold"
    assert payload["provenance"]["config"]["betas"] == {"start": 2, "values": [0.75]}
    assert payload["thresholds"][0]["approx"] == pytest.approx(1 / (0.25 * 78))


def test_simulate_with_registry(tmp_path):
    db = tmp_path / "reg.db"
    args = ["simulate", "--rho", "0.05,0.1", "--trials", "200", "--block-size", "50", "--seed", "7", "--registry-db", str(db)]
    first = run(*args, "--out", str(tmp_path / "a" / "points.csv"))
    assert first.exit_code == 0
    assert "diff=new" in first.output
    second = run(*args, "--workers", "2", "--out", str(tmp_path / "b" / "points.csv"))
    assert second.exit_code == 0
    assert "diff=no_change" in second.output

    df, _ = read_frame(tmp_path / "a" / "points.csv")
    assert list(df["trials"]) == [200, 200]
    with sqlite3.connect(db) as conn:
        statuses = [r[0] for r in conn.execute("SELECT status FROM runs")]
    assert statuses == ["ok", "ok"]


def test_plot_emit_empty_input(tmp_path):
    empty = tmp_path / "empty.csv"
    empty.write_text("", encoding="utf-8")
    res = run("plot-emit", str(empty), "--out", str(tmp_path / "plot"))
    assert res.exit_code == 0
    assert "[WARN] no data series" in res.output
    assert (tmp_path / "plot.gp").exists()


def test_simulate_explicit_channel(tmp_path):
    out = tmp_path / "points.csv"
    res = run("simulate", "--px", "0.02", "--pz", "0.04", "--trials", "100", "--seed", "3", "--out", str(out))
    assert res.exit_code == 0
    df, prov = read_frame(out)
    assert len(df) == 1
    assert prov["config"]["channel"]["p_X"] == pytest.approx(0.02)
    assert prov["config"]["channel"]["p_Y"] == 0.0
    assert "rho" not in prov["config"]
    row = df.iloc[0]
    assert (row.p_X, row.p_Y, row.p_Z) == (pytest.approx(0.02), 0.0, pytest.approx(0.04))
    assert row.rho == pytest.approx(0.06)
    assert row.A == pytest.approx(4.0)
