import json
import math
import subprocess
import sys

import numpy as np
import pytest
from numpy.testing import assert_allclose

from mqdimer import DimerParams, SweepConfig, analytic_intensities, concurrence_analytic, run_sweep
from mqdimer.cli import format_state, main, parse_amplitude, parse_quantities
from mqdimer.errors import InvalidConfig
from mqdimer.sweep import CSV_HEADER, read_csv

ISQ = 1.0 / math.sqrt(2.0)


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "mqdimer", *args], capture_output=True, text=True
    )


class TestSweepConfig:
    def test_default_is_valid(self):
        SweepConfig().check()

    def test_rejects_degenerate_range(self):
        with pytest.raises(InvalidConfig):
            SweepConfig(tau_bar_start=0.0, tau_bar_end=0.0, points=2).check()

    def test_rejects_bad_points(self):
        with pytest.raises(InvalidConfig):
            SweepConfig(points=1).check()
        with pytest.raises(InvalidConfig):
            SweepConfig(points=10**6 + 1).check()

    def test_rejects_unknown_quantity(self):
        with pytest.raises(InvalidConfig):
            SweepConfig(quantities=("j2", "entropy")).check()

    def test_rejects_bad_format(self):
        with pytest.raises(InvalidConfig):
            SweepConfig(format="png").check()

    def test_unnormalized_needs_renormalize(self):
        cfg = SweepConfig(alpha=1.0, beta=1.0)
        with pytest.raises(InvalidConfig):
            cfg.params()
        p = SweepConfig(alpha=1.0, beta=1.0, renormalize=True).params()
        assert_allclose(abs(p.alpha), ISQ, atol=1e-12)


class TestRunSweep:
    def test_header_and_shape(self, tmp_path):
        cfg = SweepConfig(points=11, output_path=str(tmp_path / "out.csv"))
        (path,) = run_sweep(cfg)
        lines = path.read_text().splitlines()
        assert lines[0] == "tau_bar,g0,g2,gm2,j2,concurrence,discord"
        assert lines[0] == CSV_HEADER
        assert len(lines) == 12

    def test_unrequested_columns_empty(self, tmp_path):
        cfg = SweepConfig(
            points=5, quantities=("g0",), output_path=str(tmp_path / "out.csv")
        )
        (path,) = run_sweep(cfg)
        for line in path.read_text().splitlines()[1:]:
            cells = line.split(",")
            assert cells[1] != ""
            assert cells[2] == cells[3] == cells[4] == cells[5] == cells[6] == ""

    def test_round_trip_recompute(self, tmp_path):
        cfg = SweepConfig(
            alpha=0.6,
            beta=0.8,
            b=2.0,
            points=37,
            quantities=("g0", "j2", "concurrence"),
            output_path=str(tmp_path / "out.csv"),
        )
        (path,) = run_sweep(cfg)
        data = read_csv(path)
        p = DimerParams(0.6, 0.8, 2.0)
        for i, tb in enumerate(data["tau_bar"]):
            prof = analytic_intensities(p, tau_bar=float(tb))
            assert abs(data["g0"][i] - prof.g0) <= 1e-9
            assert abs(data["g2"][i] - prof.g_plus2) <= 1e-9
            assert abs(data["gm2"][i] - prof.g_minus2) <= 1e-9
            assert abs(data["j2"][i] - prof.j2) <= 1e-9
            assert abs(data["concurrence"][i] - concurrence_analytic(p, tau_bar=float(tb))) <= 1e-9

    def test_deterministic_bytes_with_discord(self, tmp_path):
        out_a, out_b = tmp_path / "a.csv", tmp_path / "b.csv"
        for out in (out_a, out_b):
            run_sweep(
                SweepConfig(
                    alpha=ISQ,
                    beta=ISQ,
                    b=0.1,
                    points=3,
                    tau_bar_end=1.0,
                    quantities=("discord",),
                    output_path=str(out),
                )
            )
        assert out_a.read_bytes() == out_b.read_bytes()

    def test_svg_output(self, tmp_path):
        cfg = SweepConfig(
            points=20,
            quantities=("g0", "j2", "concurrence"),
            output_path=str(tmp_path / "plot"),
            format="both",
        )
        csv_path, svg_path = run_sweep(cfg)
        assert csv_path.suffix == ".csv" and svg_path.suffix == ".svg"
        svg = svg_path.read_text()
        assert svg.startswith("<svg")
        assert svg.count("<polyline") == 3
        for label in ("g0", "j2", "concurrence", "tau_bar"):
            assert label in svg


class TestParseAmplitude:
    def test_plain_real(self):
        assert parse_amplitude("0.5") == 0.5 + 0j

    def test_cartesian_pair(self):
        assert parse_amplitude("0.6,-0.8") == complex(0.6, -0.8)

    def test_polar(self):
        z = parse_amplitude("1@90")
        assert abs(z - 1j) <= 1e-12

    def test_error_position(self):
        with pytest.raises(InvalidConfig, match="position 4"):
            parse_amplitude("1.0,x2")
        with pytest.raises(InvalidConfig, match="position 0"):
            parse_amplitude("zz@45")
        with pytest.raises(InvalidConfig):
            parse_amplitude("")

    def test_quantities_parser(self):
        assert parse_quantities("j2, g0") == ("g0", "j2")
        with pytest.raises(InvalidConfig):
            parse_quantities("g0,magnetization")


class TestFormatState:
    def test_initial_matrix_entries(self):
        text = format_state(1.0 + 0j, 0j, 10.0, 0.0)
        eb = math.exp(10.0)
        assert f"{eb / (eb + 1.0):#.9g}" in text
        assert f"{1.0 / (eb + 1.0):#.9g}" in text

    def test_corner_entry_rendering(self):
        text = format_state(1.0 + 0j, 0j, 10.0, math.pi / 4.0)
        assert "0.499977301i" in text
        rows = text.splitlines()[1:]
        assert len(rows) == 4 and all(len(r.split("  ")) == 4 for r in rows)


class TestCliProcess:
    def test_fig1_preset(self, tmp_path):
        out = tmp_path / "f1"
        proc = run_cli("fig1", "--out", str(out))
        assert proc.returncode == 0, proc.stderr
        lines = (tmp_path / "f1.csv").read_text().splitlines()
        assert lines[0] == CSV_HEADER
        assert len(lines) == 502
        data = read_csv(tmp_path / "f1.csv")
        peak = float(np.max(data["j2"]))
        assert abs(peak - math.exp(10.0) / (math.exp(10.0) + 1.0)) <= 1e-12

    def test_fig1_deterministic(self, tmp_path):
        pa, pb = tmp_path / "a", tmp_path / "b"
        assert run_cli("fig1", "--out", str(pa)).returncode == 0
        assert run_cli("fig1", "--out", str(pb)).returncode == 0
        assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()

    def test_fig2_reduced(self, tmp_path):
        out = tmp_path / "f2"
        proc = run_cli("fig2", "--points", "5", "--tau-end", "1.0", "--out", str(out))
        assert proc.returncode == 0, proc.stderr
        data = read_csv(tmp_path / "f2.csv")
        assert data["discord"] is not None
        assert data["g0"] is None

    def test_state_subcommand(self):
        proc = run_cli("state", "--alpha", "1", "--beta", "0", "--b", "10",
                       "--tau-bar", str(math.pi / 4.0))
        assert proc.returncode == 0
        assert "0.499977301i" in proc.stdout

    def test_sweep_with_config_and_override(self, tmp_path):
        cfg_file = tmp_path / "cfg.json"
        cfg_file.write_text(json.dumps({
            "alpha": "1", "beta": "0", "b": 10.0,
            "tau_bar_start": 0.0, "tau_bar_end": 1.0,
            "points": 4, "quantities": ["g0"],
            "output_path": str(tmp_path / "from_config.csv"),
        }))
        proc = run_cli("sweep", "--config", str(cfg_file), "--points", "6")
        assert proc.returncode == 0, proc.stderr
        lines = (tmp_path / "from_config.csv").read_text().splitlines()
        assert len(lines) == 7  # flag overrides the config file

    def test_invalid_config_exit_codes(self, tmp_path):
        assert run_cli("sweep", "--points", "1").returncode == 2
        assert run_cli("sweep", "--tau-start", "1.0", "--tau-end", "0.0").returncode == 2
        assert run_cli("sweep", "--quantities", "bogus").returncode == 2
        assert run_cli("state", "--alpha", "1.0,x2").returncode == 2
        assert run_cli("sweep", "--alpha", "1", "--beta", "1").returncode == 2
        cfg_file = tmp_path / "bad.json"
        cfg_file.write_text("{\"mystery\": 1}")
        assert run_cli("sweep", "--config", str(cfg_file)).returncode == 2
        cfg_file.write_text("{\"b\": \"warm\"}")
        assert run_cli("sweep", "--config", str(cfg_file)).returncode == 2

    def test_io_error_exit_code(self):
        proc = run_cli("sweep", "--points", "4", "--out", "/no_such_dir_zz/x.csv")
        assert proc.returncode == 3

    def test_seed_flag_reserved(self, tmp_path):
        proc = run_cli("sweep", "--points", "4", "--seed", "7",
                       "--out", str(tmp_path / "s.csv"))
        assert proc.returncode == 0

    def test_svg_format(self, tmp_path):
        proc = run_cli("sweep", "--points", "8", "--format", "svg",
                       "--out", str(tmp_path / "pic"))
        assert proc.returncode == 0
        assert (tmp_path / "pic.svg").read_text().startswith("<svg")

    def test_main_callable_directly(self, tmp_path, capsys):
        code = main(["sweep", "--points", "4", "--out", str(tmp_path / "m.csv")])
        assert code == 0
        assert "wrote" in capsys.readouterr().out
