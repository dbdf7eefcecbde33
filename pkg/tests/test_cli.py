import json
import math
from pathlib import Path

import numpy as np
import pytest

from ringqed import cli, coupling
from ringqed.cavity import NoRootError

DEFAULT_SCENARIO = Path(__file__).resolve().parent.parent / "scenarios" / "default.json"


def read_default():
    return json.loads(DEFAULT_SCENARIO.read_text(encoding="utf-8"))


def write_config(tmp_path, doc, name="scenario.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc), encoding="utf-8")
    return str(path)


def parse_report(text):
    lines = text.strip().split("\n")
    assert lines[0] == "quantity,value"
    return {key: value for key, value in (line.split(",") for line in lines[1:])}


def parse_table(text):
    lines = text.strip().split("\n")
    header = lines[0].split(",")
    rows = [line.split(",") for line in lines[1:]]
    return header, rows


def test_mode_report_to_stdout(tmp_path, capsys):
    config = write_config(tmp_path, read_default())
    assert cli.main(["mode", "--config", config, "--out", "-"]) == 0
    report = parse_report(capsys.readouterr().out)
    omega_hz = float(report["omega_over_2pi_hz"])
    assert abs(omega_hz - 9.09e9) / 9.09e9 < 0.01
    assert float(report["boundary_residual_inner"]) < 1e-8
    assert float(report["boundary_residual_outer"]) < 1e-8


def test_mode_scaled_geometry(tmp_path, capsys):
    doc = read_default()
    for key in ("rho1_m", "rho2_m", "delta_z_m"):
        doc["geometry"][key] *= 10.0
    config = write_config(tmp_path, doc)
    assert cli.main(["mode", "--config", config, "--out", "-"]) == 0
    report = parse_report(capsys.readouterr().out)
    assert abs(float(report["omega_over_2pi_hz"]) - 0.909e9) / 0.909e9 < 0.01


def test_invalid_geometry_exits_2(tmp_path, capsys):
    doc = read_default()
    doc["geometry"]["rho2_m"] = 0.5 * doc["geometry"]["rho1_m"]
    config = write_config(tmp_path, doc)
    assert cli.main(["mode", "--config", config, "--out", "-"]) == 2
    assert "0 < rho1 < rho2" in capsys.readouterr().err


def test_unknown_config_key_exits_2(tmp_path, capsys):
    doc = read_default()
    doc["typo_section"] = {}
    config = write_config(tmp_path, doc)
    assert cli.main(["mode", "--config", config, "--out", "-"]) == 2
    assert "unknown key" in capsys.readouterr().err


def test_fig2_deterministic_and_reference_value(tmp_path):
    config = write_config(tmp_path, read_default())
    first, second = tmp_path / "a.csv", tmp_path / "b.csv"
    assert cli.main(["fig2", "--config", config, "--out", str(first), "--quiet"]) == 0
    assert cli.main(["fig2", "--config", config, "--out", str(second), "--quiet"]) == 0
    assert first.read_bytes() == second.read_bytes()

    header, rows = parse_table(first.read_text(encoding="utf-8"))
    assert header == ["delta_rho_over_rho1", "f_factor"]
    assert len(rows) == 20
    f_01 = next(float(r[1]) for r in rows if abs(float(r[0]) - 0.1) < 1e-9)
    assert abs(f_01 - 0.215) / 0.215 < 0.05
    assert first.read_text(encoding="utf-8").endswith("\n")
    assert "\r" not in first.read_text(encoding="utf-8")


def test_fig2_empty_grid(tmp_path, capsys):
    doc = read_default()
    doc["simulation"]["fig2_ratio_grid"] = []
    config = write_config(tmp_path, doc)
    assert cli.main(["fig2", "--config", config, "--out", "-"]) == 0
    assert capsys.readouterr().out == "delta_rho_over_rho1,f_factor\n"


def test_fig2_partial_failure_leaves_empty_cell(tmp_path, capsys, monkeypatch):
    real_f = coupling.f_factor

    def flaky(ratio):
        if abs(ratio - 0.1) < 1e-12:
            raise NoRootError("synthetic failure")
        return real_f(ratio)

    monkeypatch.setattr(coupling, "f_factor", flaky)
    doc = read_default()
    doc["simulation"]["fig2_ratio_grid"] = [0.05, 0.1, 0.15]
    config = write_config(tmp_path, doc)
    assert cli.main(["fig2", "--config", config, "--out", "-"]) == 0
    captured = capsys.readouterr()
    _, rows = parse_table(captured.out)
    assert rows[1] == ["0.1", ""]
    assert rows[0][1] != "" and rows[2][1] != ""
    assert "warning" in captured.err and "0.1" in captured.err


def test_fig2_all_rows_failing_exits_1(tmp_path, capsys, monkeypatch):
    def broken(ratio):
        raise NoRootError("synthetic failure")

    monkeypatch.setattr(coupling, "f_factor", broken)
    config = write_config(tmp_path, read_default())
    assert cli.main(["fig2", "--config", config, "--out", "-"]) == 1
    assert "all 20" in capsys.readouterr().err


def test_fig3a_columns_and_symmetry(tmp_path, capsys):
    config = write_config(tmp_path, read_default())
    assert cli.main(["fig3a", "--config", config, "--out", "-", "--quiet"]) == 0
    header, rows = parse_table(capsys.readouterr().out)
    assert header == [
        "detuning_over_2pi_hz",
        "omega_plus_minus_omega_over_2pi_hz",
        "omega_minus_minus_omega_over_2pi_hz",
    ]
    det = np.array([float(r[0]) for r in rows])
    upper = np.array([float(r[1]) for r in rows])
    lower = np.array([float(r[2]) for r in rows])

    # minimum splitting 2g at resonance
    zero_row = int(np.argmin(np.abs(det)))
    assert det[zero_row] == 0.0
    gap = upper[zero_row] - lower[zero_row]
    assert abs(gap - 2.0 * 5.27e6) / (2.0 * 5.27e6) < 0.02
    assert np.min(upper - lower) == gap

    # mirror symmetry row by row
    assert np.max(np.abs(upper + lower[::-1])) <= 1e-12 * np.max(np.abs(upper))


def test_fig3b_conservation_and_first_zero(tmp_path):
    config = write_config(tmp_path, read_default())
    out = tmp_path / "fig3b.csv"
    assert cli.main(["fig3b", "--config", config, "--out", str(out), "--quiet"]) == 0
    header, rows = parse_table(out.read_text(encoding="utf-8"))
    assert header == ["time_s", "p_excited", "n_photon", "norm"]
    time = np.array([float(r[0]) for r in rows])
    p_e = np.array([float(r[1]) for r in rows])
    n_ph = np.array([float(r[2]) for r in rows])
    norm = np.array([float(r[3]) for r in rows])

    assert p_e[0] == 1.0
    assert np.max(np.abs(p_e + n_ph - 1.0)) < 1e-9
    assert np.max(np.abs(norm - 1.0)) < 1e-9

    # first swap of the excitation into the cavity near 1/(4 * 5.27 MHz)
    first_dip = int(np.argmin(p_e[: len(p_e) // 2]))
    assert abs(time[first_dip] - 1.0 / (4.0 * 5.27e6)) < 5e-10


def test_fig3b_rejects_short_time_grid(tmp_path, capsys):
    doc = read_default()
    doc["simulation"]["time_grid_s"] = {"start": 0.0, "stop": 1.0e-8, "num": 50}
    config = write_config(tmp_path, doc)
    assert cli.main(["fig3b", "--config", config, "--out", "-"]) == 2
    assert "Rabi periods" in capsys.readouterr().err


def test_decay_report(tmp_path, capsys):
    config = write_config(tmp_path, read_default())
    assert cli.main(["decay", "--config", config, "--out", "-", "--quiet"]) == 0
    report = parse_report(capsys.readouterr().out)
    assert 0.72 < float(report["decay_time_s"]) < 0.95
    assert abs(float(report["rabi_periods_per_decay"]) - 8.7e6) / 8.7e6 < 0.02


def test_decay_decoupled_budget_infinite(tmp_path, capsys):
    doc = read_default()
    doc["qubit"] = {"sin_gamma": 0.0}
    config = write_config(tmp_path, doc)
    assert cli.main(["decay", "--config", config, "--out", "-", "--quiet"]) == 0
    report = parse_report(capsys.readouterr().out)
    assert float(report["gamma_per_s"]) == 0.0
    assert report["rabi_periods_per_decay"] == "inf"


def test_rabi_runtime_failure_exits_1(tmp_path, capsys):
    doc = read_default()
    doc["simulation"]["n_cut"] = 1
    doc["simulation"]["rwa"] = False  # leaks into the truncated level
    config = write_config(tmp_path, doc)
    assert cli.main(["rabi", "--config", config, "--out", "-"]) == 1
    assert "n_cut" in capsys.readouterr().err


def test_all_products_and_figures(tmp_path):
    doc = read_default()
    doc["output"]["dir"] = str(tmp_path / "fromconfig")
    config = write_config(tmp_path, doc)
    out_dir = tmp_path / "results"
    assert cli.main(["all", "--config", config, "--out", str(out_dir), "--quiet"]) == 0
    for name in ("mode", "fig2", "fig3a", "fig3b", "rabi", "decay"):
        assert (out_dir / f"{name}.csv").exists()
    for name in ("fig2", "fig3a", "fig3b", "rabi"):  # figures enabled in the default config
        assert (out_dir / f"{name}.png").stat().st_size > 0
    assert not (out_dir / "mode.png").exists()


def test_all_without_figures(tmp_path):
    doc = read_default()
    doc["output"]["figures"] = False
    doc["output"]["products"] = ["mode", "fig2"]
    config = write_config(tmp_path, doc)
    out_dir = tmp_path / "results"
    assert cli.main(["all", "--config", config, "--out", str(out_dir), "--quiet"]) == 0
    assert (out_dir / "mode.csv").exists()
    assert (out_dir / "fig2.csv").exists()
    assert not (out_dir / "fig2.png").exists()
    assert not (out_dir / "fig3a.csv").exists()


def test_plot_flag_renders_png(tmp_path):
    doc = read_default()
    doc["output"]["figures"] = False
    config = write_config(tmp_path, doc)
    out = tmp_path / "fig2.csv"
    assert cli.main(["fig2", "--config", config, "--out", str(out), "--quiet", "--plot"]) == 0
    assert (tmp_path / "fig2.png").stat().st_size > 0


def test_plot_to_stdout_warns(tmp_path, capsys):
    config = write_config(tmp_path, read_default())
    assert cli.main(["fig2", "--config", config, "--out", "-", "--plot"]) == 0
    assert "skipping plot" in capsys.readouterr().err


def test_quiet_suppresses_info(tmp_path, capsys):
    config = write_config(tmp_path, read_default())
    out = tmp_path / "mode.csv"
    assert cli.main(["mode", "--config", config, "--out", str(out), "--quiet"]) == 0
    assert capsys.readouterr().err == ""
    assert cli.main(["mode", "--config", config, "--out", str(out)]) == 0
    assert "wrote" in capsys.readouterr().err


def test_missing_config_exits_2(capsys):
    assert cli.main(["mode", "--config", "/no/such/file.json", "--out", "-"]) == 2
    assert "cannot read" in capsys.readouterr().err
