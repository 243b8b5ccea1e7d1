"""Sweep drivers, table serialization, and the command-line interface."""

import json
import math
import os
import subprocess
import sys

import numpy as np
import pytest

from landau_tfd import (
    PhysicalParams,
    SweepConfig,
    SweepRange,
    complexity,
    high_T_rate_limit,
    run_beta_sweep,
    run_lloyd,
    run_omega_sweep,
    run_time_series,
    run_verify,
)
from landau_tfd.cli import main


def small_config(mode: str, **kw) -> SweepConfig:
    defaults = dict(
        params=PhysicalParams(omega=0.5, omega_ref=1.0, beta=2.0),
        samples_per_period=8,
        fock_dim=24,
    )
    defaults.update(kw)
    return SweepConfig(mode=mode, **defaults)


class TestSweepRange:
    def test_linear_grid(self):
        g = SweepRange(0.0, 1.0, 5).grid()
        assert np.allclose(g, [0.0, 0.25, 0.5, 0.75, 1.0])

    def test_log_grid(self):
        g = SweepRange(0.01, 100.0, 5, log=True).grid()
        assert np.allclose(g, [0.01, 0.1, 1.0, 10.0, 100.0])

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            SweepRange(0.0, 1.0, 1)
        with pytest.raises(ValueError):
            SweepRange(2.0, 1.0, 5)
        with pytest.raises(ValueError):
            SweepRange(0.0, 1.0, 5, log=True)


class TestSweepConfig:
    def test_roundtrip(self):
        cfg = small_config("beta-sweep", range_=SweepRange(0.1, 10.0, 7, log=True))
        again = SweepConfig.from_dict(json.loads(json.dumps(cfg.to_dict())))
        assert again == cfg

    def test_roundtrip_infinite_beta(self):
        cfg = small_config(
            "time-series",
            params=PhysicalParams(omega=0.5, omega_ref=1.0, beta=math.inf),
            betas=(math.inf, 0.0),
        )
        again = SweepConfig.from_dict(json.loads(json.dumps(cfg.to_dict())))
        assert again == cfg

    def test_invalid_mode(self):
        with pytest.raises(ValueError):
            SweepConfig(mode="banana")


class TestTimeSeries:
    def test_columns_per_beta(self):
        table = run_time_series(small_config("time-series", betas=(math.inf, 1.0)))
        names = [c[0] for c in table.columns]
        assert names == [
            "t",
            "complexity[beta=inf]",
            "rate[beta=inf]",
            "complexity[beta=1]",
            "rate[beta=1]",
        ]

    def test_covers_two_periods(self):
        cfg = small_config("time-series", betas=(1.0,))
        table = run_time_series(cfg)
        ts = table.column("t")
        assert len(ts) == 2 * cfg.samples_per_period
        assert ts[0] == 0.0
        assert ts[-1] == pytest.approx(2.0 * cfg.params.period)

    def test_values_match_library(self):
        cfg = small_config("time-series", betas=(2.0,))
        table = run_time_series(cfg)
        p = cfg.params.with_(beta=2.0)
        for t, c in zip(table.column("t"), table.column("complexity[beta=2]")):
            assert c == complexity(t, p)

    def test_infinite_temperature_columns(self):
        cfg = small_config("time-series", betas=(0.0,))
        table = run_time_series(cfg)
        assert np.all(np.isinf(table.column("complexity[beta=0]")))
        p = cfg.params
        for t, r in zip(table.column("t"), table.column("rate[beta=0]")):
            assert r == high_T_rate_limit(t, p.omega, p.omega_ref)
        assert "beta0_note" in table.metadata

    def test_metadata_echoes_config(self):
        cfg = small_config("time-series")
        table = run_time_series(cfg)
        assert SweepConfig.from_dict(json.loads(table.metadata["config"])) == cfg


class TestBetaOmegaSweeps:
    def test_beta_sweep_monotone(self):
        cfg = small_config("beta-sweep", range_=SweepRange(0.1, 100.0, 12, log=True))
        table = run_beta_sweep(cfg)
        comp = table.column("complexity_half_period")
        amp = table.column("amplitude")
        assert np.all(np.diff(comp) < 0)
        assert np.all(np.diff(amp) < 0)

    def test_omega_sweep_amplitude_vanishes_at_resonance(self):
        cfg = small_config(
            "omega-sweep",
            params=PhysicalParams(omega=0.5, omega_ref=1.0, beta=1.0),
            range_=SweepRange(0.5, 2.0, 7),
        )
        table = run_omega_sweep(cfg)
        omegas = table.column("omega")
        amp = table.column("amplitude")
        assert amp[np.argmin(np.abs(omegas - 1.0))] == 0.0
        assert np.all(amp[omegas != 1.0] > 0.0)


class TestLloyd:
    def test_all_satisfied(self):
        cfg = small_config("lloyd", range_=SweepRange(0.05, 50.0, 9, log=True))
        table = run_lloyd(cfg)
        assert np.all(table.column("satisfied") == 1.0)
        assert np.all(table.column("max_rate") <= table.column("bound"))

    def test_bound_grows_with_temperature(self):
        cfg = small_config("lloyd", range_=SweepRange(0.05, 50.0, 9, log=True))
        table = run_lloyd(cfg)
        assert np.all(np.diff(table.column("bound")) < 0)


class TestSerialization:
    def test_csv_shape(self):
        table = run_time_series(small_config("time-series", betas=(1.0,)))
        lines = table.to_csv().splitlines()
        meta = [ln for ln in lines if ln.startswith("# ")]
        body = [ln for ln in lines if not ln.startswith("# ")]
        for ln in meta:
            key, _, value = ln[2:].partition("=")
            assert key and value and "=" not in key
        assert body[0] == "t (time),complexity[beta=1] (dimensionless),rate[beta=1] (1/time)"
        assert len(body) == 1 + 2 * 8
        assert all(len(ln.split(",")) == 3 for ln in body[1:])

    def test_csv_deterministic(self):
        cfg = small_config("beta-sweep", range_=SweepRange(0.1, 10.0, 6, log=True))
        assert run_beta_sweep(cfg).to_csv() == run_beta_sweep(cfg).to_csv()

    def test_csv_full_precision(self):
        table = run_time_series(small_config("time-series", betas=(2.0,)))
        lines = table.to_csv().splitlines()
        first = [ln for ln in lines if not ln.startswith("#")][1]
        val = float(first.split(",")[1])
        assert val == table.rows[0][1]

    def test_json_loadable_with_inf(self):
        table = run_time_series(small_config("time-series", betas=(0.0,)))
        doc = json.loads(table.to_json())
        assert doc["rows"][0][1] == "inf"
        assert [c["name"] for c in doc["columns"]] == [c[0] for c in table.columns]

    def test_threaded_output_identical(self, monkeypatch):
        cfg = small_config("time-series", betas=(1.5,))
        monkeypatch.delenv("TFD_SEED_THREADS", raising=False)
        serial = run_time_series(cfg).to_csv()
        monkeypatch.setenv("TFD_SEED_THREADS", "4")
        threaded = run_time_series(cfg).to_csv()
        assert serial == threaded


class TestVerify:
    def test_report_passes(self):
        report = run_verify(small_config("verify", fock_dim=60))
        failing = [c for c in report.checks if not c.passed]
        assert report.passed, failing
        doc = json.loads(report.to_json())
        assert doc["passed"] is True
        assert len(doc["checks"]) >= 6


class TestCli:
    def run_cli(self, *argv, **kw):
        return main(list(argv)), kw

    def test_time_series_stdout(self, capsys):
        code = main(["--mode", "time-series", "--omega", "0.5", "--beta", "1", "--samples", "4"])
        out = capsys.readouterr().out
        assert code == 0
        assert out.startswith("# ")
        assert "complexity[beta=1]" in out

    def test_beta_inf_token(self, capsys):
        code = main(["--mode", "time-series", "--beta", "inf", "--samples", "4"])
        assert code == 0
        assert "complexity[beta=inf]" in capsys.readouterr().out

    def test_out_file_and_json(self, tmp_path, capsys):
        path = tmp_path / "table.json"
        code = main(
            [
                "--mode",
                "beta-sweep",
                "--range",
                "0.1:10:5:log",
                "--format",
                "json",
                "--out",
                str(path),
            ]
        )
        assert code == 0
        assert capsys.readouterr().out == ""
        doc = json.loads(path.read_text())
        assert len(doc["rows"]) == 5

    def test_usage_error_bad_mode(self, capsys):
        assert main(["--mode", "banana"]) == 1

    def test_usage_error_bad_range(self, capsys):
        assert main(["--mode", "beta-sweep", "--range", "1:2"]) == 1

    def test_usage_error_missing_mode(self, capsys):
        assert main([]) == 1

    def test_lloyd_exit_zero(self, capsys):
        code = main(["--mode", "lloyd", "--omega", "0.5", "--range", "0.1:10:5:log"])
        assert code == 0
        out = capsys.readouterr().out
        assert "satisfied (bool)" in out

    def test_verify_exit_zero(self, capsys):
        code = main(["--mode", "verify", "--fock-dim", "60"])
        assert code == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["passed"] is True

    def test_console_script_installed(self):
        proc = subprocess.run(
            [sys.executable, "-m", "landau_tfd.cli", "--mode", "time-series", "--samples", "4", "--beta", "2"],
            capture_output=True,
            text=True,
            env={**os.environ, "TFD_SEED_THREADS": "2"},
        )
        assert proc.returncode == 0
        assert "complexity[beta=2]" in proc.stdout
