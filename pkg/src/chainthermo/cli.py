"""Command-line front end.

Subcommands: spectrum, population, qfi, peaks, sweep, reproduce, optimize.
Outputs land in --out (or $CHAINTHERMO_OUTDIR, default the working
directory).  Exit codes: 0 success, 2 configuration error, 3 numerical
failure.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import replace
from pathlib import Path

import numpy as np

from .metrology import BoundaryPopulationError
from .output import plot_curve_svg, write_curve_csv, write_spectrum_csv, write_table_csv
from .presets import PRESETS, reproduce
from .scenario import (
    ConfigError,
    Scenario,
    optimize_coupling,
    peak_source_quantity,
    run_scenario,
    scenario_from_config,
)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3


def _parse_grid(text: str) -> tuple[float, float, int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise ConfigError(f"--grid expects min:max:n, got {text!r}")
    try:
        return float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise ConfigError(f"--grid expects min:max:n, got {text!r}") from exc


def _parse_free(text: str) -> tuple[str, float, float]:
    parts = text.split(":")
    if len(parts) != 3:
        raise ConfigError(f"--free expects name:lo:hi, got {text!r}")
    try:
        return parts[0], float(parts[1]), float(parts[2])
    except ValueError as exc:
        raise ConfigError(f"--free expects name:lo:hi, got {text!r}") from exc


def _load_scenario(args, quantities: tuple[str, ...] | None = None) -> Scenario:
    scenario = scenario_from_config(args.config)
    if getattr(args, "grid", None):
        t_min, t_max, n_points = _parse_grid(args.grid)
        scenario = replace(scenario, t_min=t_min, t_max=t_max, n_points=n_points)
    if quantities is not None:
        scenario = replace(scenario, quantities=quantities, sweep=scenario.sweep)
    return scenario


def _out_dir(args) -> Path:
    out = args.out or os.environ.get("CHAINTHERMO_OUTDIR") or "."
    path = Path(out)
    path.mkdir(parents=True, exist_ok=True)
    return path


def _emit_curve(args, scenario: Scenario, stem: str) -> Path:
    result = run_scenario(scenario)
    out = _out_dir(args)
    comments = [
        f"command = {stem}",
        f"config = {args.config}",
        "quantities = " + " ".join(scenario.quantities),
    ]
    written = None
    if args.format in ("csv", "both"):
        written = write_curve_csv(
            out / f"{stem}.csv", result.curve.temperatures, result.curve.values, comments
        )
    if args.format in ("svg", "both"):
        plot_curve_svg(
            out / f"{stem}.svg", result.curve.temperatures, result.curve.values, title=stem
        )
    return written or out / f"{stem}.svg"


def _cmd_spectrum(args) -> int:
    scenario = _load_scenario(args)
    result = run_scenario(
        replace(scenario, quantities=("population",), sweep=None, n_points=3)
    )
    out = _out_dir(args)
    path = write_spectrum_csv(
        out / "spectrum.csv",
        result.spectrum,
        result.predictions,
        [f"config = {args.config}"],
    )
    print("channel  energy          probe_weight    predicted_peak_T")
    for i, ((energy, predicted), weight) in enumerate(
        zip(result.predictions, result.spectrum.probe_weights), start=1
    ):
        print(f"{i:>7}  {energy: .8e}  {weight:.8e}  {predicted:.8e}")
    print(f"wrote {path}")
    return EXIT_OK


def _cmd_population(args) -> int:
    scenario = _load_scenario(args, quantities=("population", "dpopulation"))
    path = _emit_curve(args, scenario, "population")
    print(f"wrote {path}")
    return EXIT_OK


def _cmd_qfi(args) -> int:
    quantities = ("population", "dpopulation", "qfi", "cfi", "fi_sigma_z", "fi_sigma_x")
    scenario = _load_scenario(args, quantities=quantities)
    path = _emit_curve(args, scenario, "qfi")
    print(f"wrote {path}")
    return EXIT_OK


def _cmd_peaks(args) -> int:
    scenario = _load_scenario(args)
    source = peak_source_quantity(scenario.quantities) or "qfi"
    if source not in scenario.quantities:
        scenario = replace(scenario, quantities=scenario.quantities + (source,))
    result = run_scenario(scenario)
    out = _out_dir(args)
    rows = []
    for curve_name, peaks in sorted(result.peaks.items()):
        for peak in peaks:
            rows.append((curve_name, peak.temperature, peak.height, peak.prominence))
    print(f"{len(rows)} peak(s) on {source}")
    for curve_name, temperature, height, prominence in rows:
        print(f"  {curve_name}: T = {temperature:.6g}, height = {height:.6g}")
    path = out / "peaks.csv"
    lines = ["# peak list", "curve,temperature,height,prominence"]
    for (curve_name, temperature, height, prominence) in rows:
        lines.append(f"{curve_name},{temperature:.17g},{height:.17g},{prominence:.17g}")
    path.write_text("\n".join(lines) + "\n")
    print(f"wrote {path}")
    return EXIT_OK


def _cmd_sweep(args) -> int:
    scenario = _load_scenario(args)
    if scenario.sweep is None:
        raise ConfigError("the sweep subcommand needs a [sweep] section in the config")
    path = _emit_curve(args, scenario, "sweep")
    print(f"wrote {path}")
    return EXIT_OK


def _cmd_reproduce(args) -> int:
    written = reproduce(args.preset, _out_dir(args), args.format)
    for path in written:
        print(f"wrote {path}")
    return EXIT_OK


def _cmd_optimize(args) -> int:
    scenario = _load_scenario(args)
    free = [_parse_free(text) for text in args.free]
    result = optimize_coupling(scenario.spec, args.target_t, free, passes=args.passes)
    out = _out_dir(args)
    trace_path = write_table_csv(
        out / "optimize_trace.csv",
        ["pass", "value", "qfi"],
        [
            np.array([step.pass_index for step in result.trace], dtype=float),
            np.array([step.value for step in result.trace]),
            np.array([step.qfi for step in result.trace]),
        ],
        [
            "golden-section trace; parameter column order follows --free",
            "parameters = " + " ".join(name for name, _, _ in free),
        ],
    )
    for name, value in result.parameters.items():
        print(f"{name} = {value:.12g}")
    print(f"qfi({args.target_t:g}) = {result.qfi:.12g}")
    print(f"wrote {trace_path}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chainthermo",
        description="Ancilla-chain qubit thermometry: populations, Fisher information, peaks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, config_required=True):
        if config_required:
            p.add_argument("--config", required=True, help="scenario config file")
        p.add_argument("--out", default=None, help="output directory (default $CHAINTHERMO_OUTDIR or .)")
        p.add_argument("--format", choices=("csv", "svg", "both"), default="csv")
        p.add_argument("--grid", default=None, help="override grid as min:max:n")

    p = sub.add_parser("spectrum", help="transition energies, weights, predicted peaks")
    add_common(p)
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("population", help="probe population and its derivative")
    add_common(p)
    p.set_defaults(func=_cmd_population)

    p = sub.add_parser("qfi", help="all Fisher-information quantities on the grid")
    add_common(p)
    p.set_defaults(func=_cmd_qfi)

    p = sub.add_parser("peaks", help="detected peaks of the configured scenario")
    add_common(p)
    p.set_defaults(func=_cmd_peaks)

    p = sub.add_parser("sweep", help="evaluate the configured parameter sweep")
    add_common(p)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("reproduce", help="write the CSV/SVG panels of a named preset")
    p.add_argument("preset", help="preset name, e.g. " + ", ".join(sorted(PRESETS)[:4]) + ", ...")
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=("csv", "svg", "both"), default="csv")
    p.set_defaults(func=_cmd_reproduce)

    p = sub.add_parser("optimize", help="golden-section QFI maximization at one temperature")
    add_common(p)
    p.add_argument("--target-t", type=float, required=True, help="temperature to optimize at")
    p.add_argument(
        "--free",
        action="append",
        required=True,
        help="free parameter as name:lo:hi (repeatable)",
    )
    p.add_argument("--passes", type=int, default=2)
    p.set_defaults(func=_cmd_optimize)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (BoundaryPopulationError, FloatingPointError, np.linalg.LinAlgError, RuntimeError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except ValueError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    raise SystemExit(main())
