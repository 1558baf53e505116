"""End-to-end command-line runs: exit codes, CSV schema, manifests, plots.

Everything runs in-process through main(argv) against temp directories,
so these tests exercise argument parsing, config validation, artifact
writing and the documented exit code contract without spawning shells.
"""

import json
import subprocess
import sys
from pathlib import Path

import pytest

from fblink import cli, estimation, mathcore, optimizer, relaying
from fblink.estimation import PilotPolicy

BASE_CONFIG = """\
[scenario]
power_db = 20
scheme = dt
payload_bits = 256

[policy]
kind = ppc
kappa = 2

[sweep]
snr_db_min = 0
snr_db_max = 2
snr_db_step = 1
schemes = df
policies = ppc
n_min = 3
n_max = 400
"""


@pytest.fixture
def config_path(tmp_path):
    path = tmp_path / "scenario.cfg"
    path.write_text(BASE_CONFIG, encoding="utf-8")
    return path


def run(*argv):
    return cli.main([str(a) for a in argv])


def test_unknown_config_key_exits_2(tmp_path, capsys):
    path = tmp_path / "bad.cfg"
    path.write_text("[scenario]\npower_db = 20\nbandwidth = 5\n", encoding="utf-8")
    assert run("sweep-kappa", "--config", path, "--out", tmp_path) == 2
    err = capsys.readouterr().err
    assert f"{path}:3" in err and "unknown key 'bandwidth'" in err


def test_bad_config_value_exits_2(tmp_path, capsys):
    path = tmp_path / "bad.cfg"
    path.write_text("[scenario]\npower_db = loud\n", encoding="utf-8")
    assert run("sweep-kappa", "--config", path, "--out", tmp_path) == 2
    err = capsys.readouterr().err
    assert f"{path}:2" in err and "bad value" in err


def test_missing_config_exits_2(tmp_path, capsys):
    assert run("sweep-snr", "--config", tmp_path / "nope.cfg", "--out", tmp_path) == 2
    assert "not found" in capsys.readouterr().err


def test_sweep_snr_artifacts(config_path, tmp_path):
    out = tmp_path / "run"
    assert run("sweep-snr", "--config", config_path, "--out", out) == 0
    text = (out / "sweep_snr.csv").read_text(encoding="utf-8")
    lines = text.splitlines()
    assert lines[0] == "# fblink csv schema 1; table sweep_snr"
    assert lines[1] == "snr_db,scheme,policy,epsilon,n_p_used,gamma_eff"
    rows = [line.split(",") for line in lines[2:]]
    assert len(rows) == 3  # snr grid 0, 1, 2 for one scheme x policy
    assert {r[1] for r in rows} == {"df"} and {r[2] for r in rows} == {"ppc"}
    # spot-check one row against the library
    cfg = relaying.ScenarioConfig(power=mathcore.db_to_linear(0.0), scheme="df",
                                  payload_bits=256.0,
                                  policy=PilotPolicy("ppc", kappa=2.0))
    want = relaying.outage_df(cfg).eps_df
    assert float(rows[0][3]) == pytest.approx(want, rel=1e-4)

    manifest = json.loads((out / "sweep_snr.manifest.json").read_text())
    assert manifest["schema_version"] == 1
    assert manifest["conventions"] == {"mu_log_mode": "bits",
                                       "gamma_y_mode": "drd",
                                       "mrc_n_mode": "relay",
                                       "power_mode": "per_link"}
    assert manifest["inputs_sha256"] == {"scenario.cfg": cli.ConfigFile(str(config_path)).sha256}
    assert "sweep_snr.csv" in manifest["outputs_sha256"]


def test_manifest_identical_across_out_dirs(config_path, tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    assert run("sweep-kappa", "--config", config_path, "--out", a) == 0
    assert run("sweep-kappa", "--config", config_path, "--out", b) == 0
    assert (a / "sweep_kappa.manifest.json").read_bytes() == \
        (b / "sweep_kappa.manifest.json").read_bytes()
    assert (a / "sweep_kappa.csv").read_bytes() == (b / "sweep_kappa.csv").read_bytes()


def test_sweep_kappa_rows(tmp_path):
    path = tmp_path / "k.cfg"
    path.write_text("[scenario]\npower_db = 10\n\n[sweep]\n"
                    "kappa_list = 2\nn_list = 50, 100\n", encoding="utf-8")
    out = tmp_path / "run"
    assert run("sweep-kappa", "--config", path, "--out", out) == 0
    lines = (out / "sweep_kappa.csv").read_text().splitlines()
    assert lines[1] == "n,kappa,n_p_opt,gamma_eff"
    rows = [line.split(",") for line in lines[2:]]
    assert len(rows) == 2
    for row in rows:
        n, n_p = int(row[0]), int(row[2])
        assert n_p == estimation.optimal_pilot_count(n, 2.0, 10.0)


def test_scheme_policy_flag_overrides(config_path, tmp_path):
    out = tmp_path / "run"
    assert run("sweep-snr", "--config", config_path, "--out", out,
               "--scheme", "dt", "--policy", "pcsi") == 0
    rows = [line.split(",") for line in
            (out / "sweep_snr.csv").read_text().splitlines()[2:]]
    assert {r[1] for r in rows} == {"dt"}
    assert {r[2] for r in rows} == {"pcsi"}
    assert {r[4] for r in rows} == {"0"}  # perfect CSI spends no pilots


def test_latency_frontier_matches_library(config_path, tmp_path):
    out = tmp_path / "run"
    assert run("latency", "--config", config_path, "--out", out,
               "--eps-grid", "1e-2") == 0
    lines = (out / "latency.csv").read_text().splitlines()
    assert lines[0].endswith("table latency")
    assert lines[1] == ",".join(["epsilon_target", "reliability_pct", "n_opt",
                                 "n_p_opt", "latency_ms", "goodput_bpcu",
                                 "feasible"])
    row = lines[2].split(",")
    cfg = relaying.ScenarioConfig(power=mathcore.db_to_linear(20.0), scheme="dt",
                                  payload_bits=256.0,
                                  policy=PilotPolicy("ppc", kappa=2.0))
    pt = optimizer.min_latency(cfg, 1e-2, (3, 400))
    assert row[6] == "true"
    assert (int(row[2]), int(row[3])) == (pt.n_opt, pt.n_p_opt)
    assert float(row[4]) == pytest.approx(pt.latency_s * 1e3, rel=1e-5)


def test_infeasible_frontier_exits_4_but_writes_table(tmp_path, capsys):
    path = tmp_path / "hard.cfg"
    path.write_text("[scenario]\npower_db = -5\nscheme = dt\n"
                    "payload_bits = 1024\n\n[sweep]\nn_min = 3\nn_max = 40\n",
                    encoding="utf-8")
    out = tmp_path / "run"
    assert run("latency", "--config", path, "--out", out,
               "--eps-grid", "1e-4") == 4
    assert "no feasible blocklength" in capsys.readouterr().err
    lines = (out / "latency.csv").read_text().splitlines()
    assert lines[2].split(",")[6] == "false"
    assert (out / "latency.manifest.json").is_file()


def test_simulate_deterministic(config_path, tmp_path):
    a, b, c = tmp_path / "a", tmp_path / "b", tmp_path / "c"
    for out in (a, b):
        assert run("simulate", "--config", config_path, "--out", out,
                   "--seed", 9, "--samples", 20000) == 0
    assert (a / "simulate.csv").read_bytes() == (b / "simulate.csv").read_bytes()
    assert run("simulate", "--config", config_path, "--out", c,
               "--seed", 10, "--samples", 20000) == 0
    assert (a / "simulate.csv").read_bytes() != (c / "simulate.csv").read_bytes()
    manifest = json.loads((a / "simulate.manifest.json").read_text())
    assert manifest["seed"] == 9 and manifest["samples"] == 20000
    lines = (a / "simulate.csv").read_text().splitlines()
    assert lines[1].split(",")[0] == "mode"
    assert [line.split(",")[0] for line in lines[2:]] == \
        ["direct", "mrc_only", "relay_df"]


def test_plot_script_renders_pdf(config_path, tmp_path):
    out = tmp_path / "run"
    assert run("sweep-snr", "--config", config_path, "--out", out) == 0
    assert run("plot", out / "sweep_snr.csv", "--figure", "fig2",
               "--out", out) == 0
    script = out / "fig2_plot.py"
    assert script.is_file()
    proc = subprocess.run([sys.executable, str(script)],
                          capture_output=True, text=True, cwd=out)
    assert proc.returncode == 0, proc.stderr
    assert (out / "fig2_plot.pdf").stat().st_size > 0


def test_plot_rejects_wrong_table(config_path, tmp_path, capsys):
    out = tmp_path / "run"
    assert run("sweep-snr", "--config", config_path, "--out", out) == 0
    assert run("plot", out / "sweep_snr.csv", "--figure", "fig4",
               "--out", out) == 3
    assert "does not fit" in capsys.readouterr().err
    assert run("plot", out / "missing.csv", "--figure", "fig2",
               "--out", out) == 3
    # a file without the schema line is refused, not misparsed
    bare = tmp_path / "bare.csv"
    bare.write_text("snr_db,epsilon\n0,0.1\n", encoding="utf-8")
    assert run("plot", bare, "--figure", "fig2", "--out", out) == 3
    assert "missing schema line" in capsys.readouterr().err
