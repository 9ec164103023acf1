"""CSV and SVG emission for curves, spectra, and parameter sweeps.

CSV is the contract: comma-separated, '#'-prefixed comment lines recording
all parameters, one header row, floats printed with 17 significant digits so
that re-reading a file reproduces the in-memory values bit for bit.  Plots
are a convenience layer on top.
"""

from __future__ import annotations

import math
from pathlib import Path

import numpy as np


def format_float(x: float) -> str:
    if isinstance(x, float) and math.isnan(x):
        return "nan"
    return f"{x:.17g}"


def write_table_csv(
    path: str | Path,
    header: list[str],
    columns: list[np.ndarray],
    comments: list[str] | None = None,
) -> Path:
    """Write aligned columns with comment lines and a header row."""
    path = Path(path)
    if len(header) != len(columns):
        raise ValueError("header and column count differ")
    n_rows = len(columns[0])
    for column in columns:
        if len(column) != n_rows:
            raise ValueError("columns have unequal lengths")
    lines = [f"# {comment}" for comment in (comments or [])]
    lines.append(",".join(header))
    for i in range(n_rows):
        lines.append(",".join(format_float(float(column[i])) for column in columns))
    path.write_text("\n".join(lines) + "\n")
    return path


def read_table_csv(path: str | Path) -> tuple[list[str], list[str], np.ndarray]:
    """Read back (comments, header, data) from a CSV written by this module."""
    comments: list[str] = []
    header: list[str] | None = None
    rows: list[list[float]] = []
    for line in Path(path).read_text().splitlines():
        if not line.strip():
            continue
        if line.startswith("#"):
            comments.append(line[1:].strip())
        elif header is None:
            header = line.split(",")
        else:
            rows.append([float(tok) for tok in line.split(",")])
    if header is None:
        raise ValueError(f"{path} has no header row")
    return comments, header, np.array(rows)


def write_curve_csv(
    path: str | Path,
    temperatures: np.ndarray,
    values: dict[str, np.ndarray],
    comments: list[str] | None = None,
    marker_temperatures: list[float] | None = None,
) -> Path:
    """Curve CSV: temperature column plus one column per quantity.

    ``marker_temperatures`` (predicted peak positions) are emitted as an
    extra column padded with NaN beyond the marker count.
    """
    header = ["temperature", *values.keys()]
    columns = [np.asarray(temperatures, dtype=float)]
    columns += [np.asarray(column, dtype=float) for column in values.values()]
    if marker_temperatures is not None:
        markers = np.full(len(temperatures), np.nan)
        markers[: len(marker_temperatures)] = sorted(marker_temperatures)
        header.append("peak_marker")
        columns.append(markers)
    return write_table_csv(path, header, columns, comments)


def write_spectrum_csv(path, spectrum, predictions, comments=None) -> Path:
    """Transition energies, probe weights, and predicted peak temperatures."""
    energies = np.asarray(spectrum.energies, dtype=float)
    weights = np.asarray(spectrum.probe_weights, dtype=float)
    predicted = np.array([t for _, t in predictions], dtype=float)
    return write_table_csv(
        path,
        ["channel", "energy", "probe_weight", "predicted_peak_temperature"],
        [np.arange(1, energies.size + 1, dtype=float), energies, weights, predicted],
        comments,
    )


def write_transitions_csv(path, parameter, grid, energies, comments=None) -> Path:
    """Transition-energy branches versus a swept parameter."""
    grid = np.asarray(grid, dtype=float)
    energies = np.asarray(energies, dtype=float)
    header = [parameter] + [f"E{i + 1}" for i in range(energies.shape[1])]
    columns = [grid] + [energies[:, i] for i in range(energies.shape[1])]
    return write_table_csv(path, header, columns, comments)


def plot_curve_svg(
    path: str | Path,
    temperatures: np.ndarray,
    values: dict[str, np.ndarray],
    title: str = "",
    ylabel: str = "",
    log_y: bool = True,
    marker_temperatures: list[float] | None = None,
) -> Path:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    for name, column in values.items():
        ax.plot(temperatures, column, label=name)
    ax.set_xscale("log")
    if log_y:
        positive = [c[c > 0] for c in values.values() if np.any(c > 0)]
        if positive:
            ax.set_yscale("log")
            floor = min(c.min() for c in positive)
            ax.set_ylim(bottom=max(floor * 0.5, 1e-18))
    for t in marker_temperatures or []:
        if t > 0:
            ax.axvline(t, color="0.4", linestyle=":", linewidth=0.9)
    ax.set_xlabel("temperature  (units of probe frequency)")
    ax.set_ylabel(ylabel)
    ax.set_title(title)
    if len(values) > 1:
        ax.legend(fontsize=8)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, format="svg")
    plt.close(fig)
    return path


def plot_transitions_svg(path, parameter, grid, energies, title="") -> Path:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    energies = np.asarray(energies, dtype=float)
    for i in range(energies.shape[1]):
        ax.plot(grid, energies[:, i], label=f"E{i + 1}")
    ax.set_xlabel(parameter)
    ax.set_ylabel("transition energy")
    ax.set_title(title)
    ax.legend(fontsize=8)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, format="svg")
    plt.close(fig)
    return path
