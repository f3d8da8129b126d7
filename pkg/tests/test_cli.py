"""End-to-end tests for the lacuna CLI (run in-process)."""

import csv
import io
import json

import pytest

from lacuna.cli import UsageError, parse_s_range


def test_gen_seq(run_cli):
    code, out = run_cli("gen-seq", "--depth", 4, "--seed", 3)
    assert code == 0
    doc = json.loads(out)
    assert doc["header"]["command"] == "gen-seq"
    assert doc["header"]["params"]["depth"] == 4
    assert doc["body"]["terms"] == ["3", "13", "105", "1681"]


def test_omega_theta_table_all_pass(run_cli):
    code, out = run_cli("omega", "--depth", 6, "--seed", 3, "--theta-table")
    assert code == 0
    body = json.loads(out)["body"]
    assert body["odd_chain"][:2] == ["5", "41"]
    assert [row["s"] for row in body["theta_table"]] == [2, 3, 4]
    assert all(row["pass"] for row in body["theta_table"])
    assert body["enclosure"]["lo"]["den"]


def test_omega_without_table_has_no_rows(run_cli):
    code, out = run_cli("omega", "--depth", 3)
    assert code == 0
    assert "theta_table" not in json.loads(out)["body"]


def test_target_containment(run_cli):
    code, out = run_cli("target", "--mu", 3, "--nu", 2, "--depth", 8, "--seed", 3)
    assert code == 0
    body = json.loads(out)["body"]
    assert body["contained"] is True
    assert body["nu_1"] == {"index": 2, "value": "13"}
    assert body["xi_chain"][0]["num"] == "17"


def test_target_bad_spec_is_domain_error(run_cli):
    code, out = run_cli("target", "--mu", 9, "--nu", 1)
    assert code == 1
    assert json.loads(out)["error"]["code"] == "bad-target"


def test_sieve_empty_input(run_cli, tmp_path):
    path = tmp_path / "empty.csv"
    path.write_text("")
    code, out = run_cli("sieve", "--input", path, "--levels", 3)
    assert code == 0
    body = json.loads(out)["body"]
    assert body["length"] == 0
    assert body["levels"] == []
    assert body["consistent_up_to"] == 0


def test_sieve_csv(run_cli, tmp_path):
    path = tmp_path / "sizes.csv"
    path.write_text("2\n1\n3/5\n2/5\n3/10\n1/5\n")
    code, out = run_cli("sieve", "--input", path, "--levels", 3, "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [row["deleted"] for row in rows] == ["1", "2 3", "4"]
    assert rows[-1]["residual_max"] == "3/10"


def test_sieve_bad_input_reports_line(run_cli, tmp_path):
    path = tmp_path / "sizes.csv"
    path.write_text("1/2\n-1\n")
    code, out = run_cli("sieve", "--input", path)
    assert code == 1
    error = json.loads(out)["error"]
    assert error["code"] == "bad-input"


def test_sieve_missing_file(run_cli, tmp_path):
    code, out = run_cli("sieve", "--input", tmp_path / "missing.csv")
    assert code == 1
    assert json.loads(out)["error"]["code"] == "io-error"


def test_sieve_uses_configured_ladder(run_cli, tmp_path):
    cfg = tmp_path / "cfg.yaml"
    cfg.write_text('sieve:\n  ladder: ["1/2", "1/4"]\n  levels: 2\n')
    path = tmp_path / "sizes.csv"
    path.write_text("3/4, 1/3, 1/10\n")
    code, out = run_cli("sieve", "--input", path, "--config", cfg)
    assert code == 0
    levels = json.loads(out)["body"]["levels"]
    assert [lv["deleted"] for lv in levels] == [[1], [2]]


def test_polar(run_cli):
    code, out = run_cli("polar", "--a", 3, "--b", 4)
    assert code == 0
    body = json.loads(out)["body"]
    assert body["rho"] == 5.0
    assert body["phi"] == pytest.approx(0.6435011, abs=1e-7)


def test_resonance_rows(run_cli):
    code, out = run_cli("resonance", "--depth", 8, "--seed", 3, "--s-range", "2..6")
    assert code == 0
    rows = json.loads(out)["body"]["rows"]
    assert [row["s"] for row in rows] == [2, 3, 4, 5, 6]
    for row in rows:
        assert row["consistent"] is True
        assert row["gap_at_midpoint"] <= row["cos_bound"] + 1e-6


def test_resonance_out_of_range(run_cli):
    code, out = run_cli("resonance", "--depth", 6, "--s-range", "2..5")
    assert code == 1
    error = json.loads(out)["error"]
    assert error["code"] == "insufficient-depth-for-s"
    assert error["details"]["s"] == "5"


def test_decay_check(run_cli, tmp_path):
    path = tmp_path / "series.csv"
    lines = ["n,a,b"] + [f"{n},{1 / n},0" for n in range(1, 65)]
    path.write_text("\n".join(lines) + "\n")
    code, out = run_cli(
        "decay-check", "--series", path, "--alpha", 0.1, "--beta", 3.0, "--grid", 2048
    )
    assert code == 0
    body = json.loads(out)["body"]
    assert body["flags"] == []
    assert len(body["rows"]) == 64


def test_decay_check_coarse_grid(run_cli, tmp_path):
    path = tmp_path / "series.csv"
    path.write_text("n,a,b\n1000,1,0\n")
    code, out = run_cli(
        "decay-check", "--series", path, "--alpha", 0, "--beta", 3, "--grid", 16
    )
    assert code == 1
    assert json.loads(out)["error"]["code"] == "grid-too-coarse"


@pytest.mark.parametrize(
    "argv",
    [
        ("polar", "--a", 1, "--b", 1, "--format", "csv"),
        ("gen-seq", "--format", "csv"),
        ("omega", "--format", "csv"),
        ("gen-seq", "--depth", 0),
        ("resonance", "--s-range", "4..2"),
        ("resonance", "--s-range", "two"),
        ("decay-check", "--series", "x.csv", "--alpha", 2, "--beta", 1),
        ("polar", "--a", "nan", "--b", 1),
        ("polar", "--a", 1, "--b", "inf"),
        ("decay-check", "--series", "x.csv", "--alpha", 0, "--beta", "inf"),
        ("decay-check", "--series", "x.csv", "--alpha", 0, "--beta", 1, "--eps-rho", "nan"),
        ("gen-seq", "--log-level", "loud"),
        ("no-such-command",),
        ("sieve",),
    ],
)
def test_usage_errors_exit_2(run_cli, argv):
    code, out = run_cli(*argv)
    assert code == 2
    assert out == ""


def test_reports_are_deterministic(run_cli):
    argv = ("omega", "--depth", 7, "--theta-table", "--digits", 20)
    assert run_cli(*argv) == run_cli(*argv)


def test_out_path(run_cli, tmp_path):
    target = tmp_path / "nested" / "report.json"
    code, out = run_cli("gen-seq", "--depth", 2, "--out", target)
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text())["body"]["terms"] == ["3", "13"]


def test_output_dir_env(run_cli, tmp_path, monkeypatch):
    monkeypatch.setenv("LACUNA_OUTPUT_DIR", str(tmp_path))
    code, _ = run_cli("resonance", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO((tmp_path / "resonance.csv").read_text())))
    assert [row["s"] for row in rows] == ["2", "3", "4"]


def test_parse_s_range():
    assert parse_s_range("2..6") == (2, 6)
    assert parse_s_range("3") == (3, 3)
    with pytest.raises(UsageError):
        parse_s_range("6..2")


def test_decay_check_rejects_non_finite_row(run_cli, tmp_path):
    path = tmp_path / "series.csv"
    path.write_text("n,a,b\n1,inf,0\n")
    code, out = run_cli("decay-check", "--series", path, "--alpha", 0, "--beta", 1)
    assert code == 1
    error = json.loads(out)["error"]
    assert error["code"] == "bad-input"
    assert error["details"]["line"] == "2"


def test_unwritable_out_is_io_error(run_cli, tmp_path):
    code, out = run_cli("gen-seq", "--depth", 2, "--out", tmp_path)
    assert code == 1
    assert json.loads(out)["error"]["code"] == "io-error"


def test_empty_tables_still_get_csv_header(run_cli, tmp_path):
    path = tmp_path / "empty.csv"
    path.write_text("")
    code, out = run_cli("sieve", "--input", path, "--format", "csv")
    assert code == 0
    assert out == "level,delta,deleted,last_deleted,survivors,residual_max\n"

    code, out = run_cli("omega", "--depth", 3, "--theta-table", "--format", "csv")
    assert code == 0
    assert out == "s,n,odd,theta_hi,bound,pass\n"


def test_config_s_range_only_read_by_resonance(run_cli, tmp_path):
    cfg = tmp_path / "cfg.yaml"
    cfg.write_text('trig:\n  s_range: "x"\n')
    code, out = run_cli("gen-seq", "--depth", 2, "--config", cfg)
    assert code == 0
    assert json.loads(out)["body"]["terms"] == ["3", "13"]
    code, out = run_cli("resonance", "--config", cfg)
    assert code == 2
    assert out == ""


@pytest.mark.parametrize(
    "yaml_text",
    [
        'sequence:\n  depth: "six"\n',
        "sequence:\n  seed: [3]\n",
        "sequence:\n  depth: 2.5\n",
        "report:\n  digits: true\n",
        "report:\n  format: 7\n",
    ],
)
def test_mistyped_config_is_usage_error(run_cli, tmp_path, yaml_text):
    cfg = tmp_path / "cfg.yaml"
    cfg.write_text(yaml_text)
    code, out = run_cli("gen-seq", "--config", cfg)
    assert code == 2
    assert out == ""


def test_config_numbers_written_as_strings_are_coerced(run_cli, tmp_path):
    # YAML 1.1 reads 1e-6 (no dot) as a string
    cfg = tmp_path / "cfg.yaml"
    cfg.write_text("trig:\n  eps_term: 1e-6\n  grid: '512'\n")
    path = tmp_path / "series.csv"
    path.write_text("n,a,b\n1,1,0\n")
    code, out = run_cli("decay-check", "--series", path, "--alpha", 0, "--beta", 1, "--config", cfg)
    assert code == 0
    body = json.loads(out)["body"]
    assert body["eps_term"] == 1e-6
    assert body["grid_points"] == 512
