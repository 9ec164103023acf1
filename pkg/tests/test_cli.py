from pathlib import Path

import pytest

from chainthermo.cli import main
from chainthermo.output import read_table_csv

CONFIG = """
[chain]
n_qubits = 2
omegas = 0.04 1.0
xx_couplings = 0.05
dm_couplings = 0.03

[grid]
t_min = 1e-3
t_max = 3
n_points = 120

[quantities]
names = qfi population dpopulation

[sweep]
parameter = g1
values = 0.01 0.03
"""


@pytest.fixture()
def config_path(tmp_path) -> Path:
    path = tmp_path / "chain.ini"
    path.write_text(CONFIG)
    return path


def test_spectrum_command(config_path, tmp_path, capsys):
    rc = main(["spectrum", "--config", str(config_path), "--out", str(tmp_path)])
    assert rc == 0
    out = capsys.readouterr().out
    assert "predicted_peak_T" in out
    comments, header, data = read_table_csv(tmp_path / "spectrum.csv")
    assert header == ["channel", "energy", "probe_weight", "predicted_peak_temperature"]
    assert data.shape == (2, 4)
    assert abs(data[0, 1] - 0.026) < 1e-3


def test_population_command(config_path, tmp_path):
    rc = main(["population", "--config", str(config_path), "--out", str(tmp_path)])
    assert rc == 0
    _, header, data = read_table_csv(tmp_path / "population.csv")
    assert header[0] == "temperature"
    assert any(h.startswith("population[") for h in header)
    assert data.shape[0] == 120


def test_qfi_command_with_grid_override(config_path, tmp_path):
    rc = main([
        "qfi", "--config", str(config_path), "--out", str(tmp_path),
        "--grid", "0.01:1:50",
    ])
    assert rc == 0
    _, header, data = read_table_csv(tmp_path / "qfi.csv")
    assert data.shape[0] == 50
    assert abs(data[0, 0] - 0.01) < 1e-12 and abs(data[-1, 0] - 1.0) < 1e-12


def test_peaks_command(config_path, tmp_path, capsys):
    rc = main(["peaks", "--config", str(config_path), "--out", str(tmp_path)])
    assert rc == 0
    out = capsys.readouterr().out
    assert "peak(s) on qfi" in out
    text = (tmp_path / "peaks.csv").read_text()
    assert text.startswith("# peak list")
    # two sweep values, two peaks each
    assert sum(1 for line in text.splitlines() if line.startswith("qfi[")) == 4


def test_sweep_command(config_path, tmp_path):
    rc = main(["sweep", "--config", str(config_path), "--out", str(tmp_path)])
    assert rc == 0
    _, header, _ = read_table_csv(tmp_path / "sweep.csv")
    assert "qfi[g1=0.01]" in header and "qfi[g1=0.03]" in header


def test_sweep_requires_sweep_section(tmp_path):
    path = tmp_path / "nosweep.ini"
    path.write_text(
        "[chain]\nn_qubits = 2\nomegas = 1 1\nxx_couplings = 0.1\ndm_couplings = 0.1\n"
    )
    rc = main(["sweep", "--config", str(path), "--out", str(tmp_path)])
    assert rc == 2


def test_reproduce_command(tmp_path):
    rc = main(["reproduce", "fig5a", "--out", str(tmp_path)])
    assert rc == 0
    assert (tmp_path / "fig5a.csv").exists()


def test_reproduce_unknown_preset(tmp_path, capsys):
    rc = main(["reproduce", "not-a-preset", "--out", str(tmp_path)])
    assert rc == 2
    assert "unknown preset" in capsys.readouterr().err


def test_missing_config_gives_exit_code_2(tmp_path):
    rc = main(["qfi", "--config", str(tmp_path / "absent.ini"), "--out", str(tmp_path)])
    assert rc == 2


def test_bad_grid_gives_exit_code_2(config_path, tmp_path):
    rc = main([
        "qfi", "--config", str(config_path), "--out", str(tmp_path), "--grid", "nonsense",
    ])
    assert rc == 2


def test_optimize_command(config_path, tmp_path, capsys):
    rc = main([
        "optimize", "--config", str(config_path), "--out", str(tmp_path),
        "--target-t", "0.0065", "--free", "g1:0.01:0.03",
    ])
    assert rc == 0
    out = capsys.readouterr().out
    assert "g1 =" in out
    _, header, data = read_table_csv(tmp_path / "optimize_trace.csv")
    assert header == ["pass", "value", "qfi"]
    assert data.shape[0] > 10


def test_outdir_environment_variable(config_path, tmp_path, monkeypatch):
    target = tmp_path / "from-env"
    monkeypatch.setenv("CHAINTHERMO_OUTDIR", str(target))
    rc = main(["population", "--config", str(config_path)])
    assert rc == 0
    assert (target / "population.csv").exists()


def test_svg_format(config_path, tmp_path):
    rc = main([
        "population", "--config", str(config_path), "--out", str(tmp_path),
        "--format", "both",
    ])
    assert rc == 0
    assert (tmp_path / "population.svg").exists()
