"""Canonical scenario presets and file reproduction.

Each preset pins one published panel: the chain parameters, the temperature
grid, and the quantities shown.  Presets double as executable documentation
of every panel's parameter set; ``reproduce`` writes one CSV per panel (plus
an SVG rendering on request).
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .chain import ChainSpec
from .fermion import transitions_vs_parameter
from .output import (
    plot_curve_svg,
    plot_transitions_svg,
    write_curve_csv,
    write_transitions_csv,
)
from .scenario import ConfigError, Scenario, ScenarioResult, run_scenario


@dataclass(frozen=True)
class Preset:
    name: str
    description: str
    scenario: Scenario
    notes: tuple[str, ...] = ()
    markers: bool = False
    # (parameter, grid) for presets that also emit transition-energy branches
    transitions: tuple[str, tuple[float, ...]] | None = None


def _two_qubit(omega_a, j, g) -> ChainSpec:
    return ChainSpec.two_qubit(omega_a, 1.0, j, g)


_FIG8_NOTE = (
    "an alternative published listing gives J1 = 0.05 for this family; "
    "the per-panel J1 values are used"
)
_FIG9_NOTES = (
    "an alternative published listing gives g2 = 0.05; the per-panel value 0.06 is used",
    "the published per-panel listing gives J1 = 0.0075/0.008/0.0085, but with those "
    "values the lowest transition channel collapses through zero energy and neither "
    "the published four-peak structure nor the monotone growth of the low-temperature "
    "peak with g1 is reproducible; the J1 values used here (one tenth of that listing) "
    "restore both behaviours",
)
_FIG10_NOTE = (
    "panels are labelled by g1 only; the remaining couplings are common to all panels"
)


def _fig8(panel: str, g1: float, j1: float) -> Preset:
    return Preset(
        name=f"fig8{panel}",
        description=f"three-qubit chain QFI, g1={g1}, J1={j1}",
        scenario=Scenario(
            spec=ChainSpec(3, (0.04, 0.4, 1.0), (j1, 0.4), (g1, 0.4)),
            t_min=1e-3,
            t_max=3.0,
            n_points=600,
            quantities=("population", "dpopulation", "qfi"),
        ),
        notes=(_FIG8_NOTE,),
        markers=True,
    )


def _fig9(panel: str, g1: float, j1: float) -> Preset:
    return Preset(
        name=f"fig9{panel}",
        description=f"four-qubit chain QFI, g1={g1}, J1={j1}",
        scenario=Scenario(
            spec=ChainSpec(4, (0.004, 0.04, 0.4, 1.0), (j1, 0.08, 0.4), (g1, 0.06, 0.4)),
            t_min=1e-4,
            t_max=3.0,
            n_points=800,
            quantities=("population", "dpopulation", "qfi"),
        ),
        notes=_FIG9_NOTES,
        markers=True,
    )


def _fig10(panel: str, g1: float) -> Preset:
    return Preset(
        name=f"fig10{panel}",
        description=f"five-qubit chain QFI, g1={g1}",
        scenario=Scenario(
            spec=ChainSpec(
                5,
                (0.0004, 0.004, 0.04, 0.4, 1.0),
                (0.00095, 0.008, 0.08, 0.4),
                (g1, 0.005, 0.06, 0.2),
            ),
            t_min=1e-5,
            t_max=3.0,
            n_points=1000,
            quantities=("population", "dpopulation", "qfi"),
        ),
        notes=(_FIG10_NOTE,),
        markers=True,
    )


def _fig_t(row: str, j1: float, j2: float, g1: float, g2_for_qfi: float,
           sweep_max: float) -> Preset:
    return Preset(
        name=f"figT-{row}",
        description=(
            f"four-qubit transition branches vs g2 and the QFI at g2={g2_for_qfi}"
        ),
        scenario=Scenario(
            spec=ChainSpec(4, (0.004, 0.04, 0.4, 1.0), (j1, j2, 0.4), (g1, g2_for_qfi, 0.4)),
            t_min=1e-5,
            t_max=3.0,
            n_points=800,
            quantities=("population", "dpopulation", "qfi"),
        ),
        markers=True,
        transitions=("g2", tuple(np.linspace(0.0, sweep_max, 101))),
    )


PRESETS: dict[str, Preset] = {
    preset.name: preset
    for preset in [
        Preset(
            name="fig3a",
            description="resonant pair: probe population derivative (single channel)",
            scenario=Scenario(
                spec=_two_qubit(1.0, 0.04, 0.02),
                t_min=1e-3,
                t_max=10.0,
                quantities=("population", "dpopulation"),
            ),
        ),
        Preset(
            name="fig3b",
            description="off-resonant pair: population derivative with a low-T channel",
            scenario=Scenario(
                spec=_two_qubit(0.04, 0.04, 0.02),
                t_min=1e-3,
                t_max=10.0,
                quantities=("population", "dpopulation"),
            ),
        ),
        Preset(
            name="fig4",
            description="population derivative against the low/high-channel approximations",
            scenario=Scenario(
                spec=_two_qubit(0.04, 0.04, 0.02),
                t_min=1e-3,
                t_max=10.0,
                quantities=("dpopulation", "dpopulation_approx"),
            ),
        ),
        Preset(
            name="fig5a",
            description="off-resonant pair QFI for three DM couplings",
            scenario=Scenario(
                spec=_two_qubit(0.04, 0.05, 0.01),
                t_min=1e-3,
                t_max=3.0,
                quantities=("qfi",),
                sweep=("g1", (0.01, 0.02, 0.03)),
            ),
        ),
        Preset(
            name="fig5b",
            description="resonant pair QFI for three DM couplings",
            scenario=Scenario(
                spec=_two_qubit(1.0, 0.35, 0.01),
                t_min=1e-3,
                t_max=3.0,
                quantities=("qfi",),
                sweep=("g1", (0.01, 0.1, 0.15)),
            ),
        ),
        Preset(
            name="fig6",
            description="exact QFI against the two-channel approximation",
            scenario=Scenario(
                spec=_two_qubit(0.04, 0.04, 0.02),
                t_min=1e-3,
                t_max=3.0,
                quantities=("qfi", "qfi_approx"),
            ),
        ),
        Preset(
            name="fig7",
            description="QFI against the sz-measurement Fisher information",
            scenario=Scenario(
                spec=_two_qubit(1.0, 0.04, 0.02),
                t_min=1e-2,
                t_max=5.0,
                quantities=("qfi", "cfi", "fi_sigma_z", "fi_sigma_x"),
            ),
        ),
        _fig8("a", 0.04, 0.06),
        _fig8("b", 0.06, 0.08),
        _fig8("c", 0.1, 0.3),
        _fig9("a", 0.0055, 0.00075),
        _fig9("b", 0.006, 0.0008),
        _fig9("c", 0.0065, 0.00085),
        _fig10("a", 0.0005),
        _fig10("b", 0.00055),
        _fig10("c", 0.0007),
        _fig_t("top", 0.007, 0.06, 0.005, 0.04, 0.1),
        _fig_t("bottom", 0.006, 0.04, 0.004, 2.0, 2.0),
    ]
}


def get_preset(name: str) -> Preset:
    try:
        return PRESETS[name]
    except KeyError:
        known = ", ".join(sorted(PRESETS))
        raise ConfigError(f"unknown preset {name!r}; available: {known}") from None


def _preset_comments(preset: Preset, result: ScenarioResult) -> list[str]:
    scenario = preset.scenario
    spec = scenario.spec
    comments = [
        f"preset = {preset.name}",
        preset.description,
        f"n_qubits = {spec.n_qubits}",
        "omegas = " + " ".join(f"{w:g}" for w in spec.omegas),
        "xx_couplings = " + " ".join(f"{j:g}" for j in spec.xx_couplings),
        "dm_couplings = " + " ".join(f"{g:g}" for g in spec.dm_couplings),
        f"grid = {scenario.t_min:g} .. {scenario.t_max:g}, {scenario.n_points} log-spaced points",
        "quantities = " + " ".join(scenario.quantities),
    ]
    if scenario.sweep is not None:
        parameter, values = scenario.sweep
        comments.append(f"sweep {parameter} = " + " ".join(f"{v:g}" for v in values))
    comments += [f"note: {note}" for note in preset.notes]
    if preset.markers:
        markers = sorted(t for _, t in result.predictions)
        comments.append(
            "predicted_peak_temperatures = " + " ".join(f"{t:.6g}" for t in markers)
        )
    return comments


def reproduce(name: str, out_dir: str | Path = ".", fmt: str = "csv") -> list[Path]:
    """Write the CSV (and optionally SVG) panels of one preset.

    ``fmt`` is csv, svg, or both.  Returns the written paths.
    """
    if fmt not in ("csv", "svg", "both"):
        raise ConfigError(f"format must be csv, svg, or both, got {fmt!r}")
    preset = get_preset(name)
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    result = run_scenario(preset.scenario)
    comments = _preset_comments(preset, result)
    markers = sorted(t for _, t in result.predictions) if preset.markers else None

    written: list[Path] = []
    curve_stem = f"{name}_qfi" if preset.transitions is not None else name
    if fmt in ("csv", "both"):
        written.append(
            write_curve_csv(
                out_dir / f"{curve_stem}.csv",
                result.curve.temperatures,
                result.curve.values,
                comments,
                marker_temperatures=markers,
            )
        )
    if fmt in ("svg", "both"):
        written.append(
            plot_curve_svg(
                out_dir / f"{curve_stem}.svg",
                result.curve.temperatures,
                result.curve.values,
                title=preset.name,
                ylabel=" / ".join(preset.scenario.quantities),
                marker_temperatures=markers,
            )
        )

    if preset.transitions is not None:
        parameter, grid = preset.transitions
        energies = transitions_vs_parameter(preset.scenario.spec, parameter, np.asarray(grid))
        if fmt in ("csv", "both"):
            written.append(
                write_transitions_csv(
                    out_dir / f"{name}_transitions.csv", parameter, grid, energies, comments
                )
            )
        if fmt in ("svg", "both"):
            written.append(
                plot_transitions_svg(
                    out_dir / f"{name}_transitions.svg",
                    parameter,
                    grid,
                    energies,
                    title=f"{preset.name} transition energies",
                )
            )
    return written
