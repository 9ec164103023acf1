"""Temperature-sweep scenarios: configuration, evaluation, and optimization.

A Scenario bundles a chain, a log-spaced temperature grid, the quantities to
evaluate, and an optional one-parameter sweep.  Scenarios can be read from an
INI-style config file with sections::

    [chain]
    n_qubits = 2
    omegas = 0.04 1.0
    xx_couplings = 0.05
    dm_couplings = 0.03

    [grid]
    t_min = 1e-3
    t_max = 3
    n_points = 400

    [quantities]
    names = qfi population

    [sweep]            ; optional
    parameter = g1
    values = 0.01 0.02 0.03

Evaluation is deterministic: the same scenario always produces bit-identical
curves.  All quantity evaluations are pure functions of (spec, T), so grids
and sweep values could be farmed out to parallel workers; at the chain sizes
this package targets a vectorized single process is faster than any pool.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .chain import ChainSpec, closed_form_for, parse_parameter_name
from .fermion import TransitionSpectrum, spectrum_for
from .metrology import fisher_curve, population_approximations, qfi_approx
from .peaks import Peak, detect_peaks, predict_peaks

KNOWN_QUANTITIES = (
    "population",
    "dpopulation",
    "qfi",
    "qfi_approx",
    "cfi",
    "fi_sigma_z",
    "fi_sigma_x",
    "spectrum",
    "peaks",
    "dpopulation_approx",
)

DEFAULT_N_POINTS = 400  # resolves every preset's narrowest peak on a log grid


class ConfigError(Exception):
    """A scenario configuration is malformed or inconsistent."""


class EvaluationError(RuntimeError):
    """A quantity evaluation failed; carries the failing grid coordinates."""


@dataclass(frozen=True)
class Scenario:
    """A chain plus a temperature grid and the quantities to evaluate."""

    spec: ChainSpec
    t_min: float
    t_max: float
    n_points: int = DEFAULT_N_POINTS
    quantities: tuple[str, ...] = ("population", "dpopulation", "qfi")
    sweep: tuple[str, tuple[float, ...]] | None = None

    def __post_init__(self):
        if not 0.0 < self.t_min < self.t_max:
            raise ConfigError(f"need 0 < t_min < t_max, got ({self.t_min}, {self.t_max})")
        if self.n_points < 3:
            raise ConfigError(f"need at least 3 grid points, got {self.n_points}")
        unknown = [q for q in self.quantities if q not in KNOWN_QUANTITIES]
        if unknown:
            raise ConfigError(f"unknown quantities {unknown}; known: {KNOWN_QUANTITIES}")
        if self.spec.n_qubits != 2 and (
            "qfi_approx" in self.quantities or "dpopulation_approx" in self.quantities
        ):
            raise ConfigError("closed-form approximations are defined for 2-qubit chains only")
        if self.sweep is not None:
            parameter, values = self.sweep
            parse_parameter_name(parameter, self.spec.n_qubits)
            if len(values) == 0:
                raise ConfigError("sweep needs at least one value")

    @property
    def temperatures(self) -> np.ndarray:
        return np.geomspace(self.t_min, self.t_max, self.n_points)


@dataclass(frozen=True)
class QfiCurve:
    """Aligned per-quantity values on a strictly increasing temperature grid."""

    temperatures: np.ndarray
    values: dict[str, np.ndarray]

    def __post_init__(self):
        for name, column in self.values.items():
            if column.shape != self.temperatures.shape:
                raise ValueError(f"column {name!r} is not aligned with the grid")
        if np.any(np.diff(self.temperatures) <= 0.0):
            raise ValueError("temperature grid must be strictly increasing")

    @property
    def columns(self) -> list[str]:
        return list(self.values)


@dataclass(frozen=True)
class ScenarioResult:
    scenario: Scenario
    curve: QfiCurve
    peaks: dict[str, list[Peak]]
    spectrum: TransitionSpectrum
    predictions: list[tuple[float, float]]


def _evaluate_columns(spec: ChainSpec, temperatures: np.ndarray, quantities) -> dict[str, np.ndarray]:
    base = fisher_curve(spec, temperatures)
    columns: dict[str, np.ndarray] = {}
    for quantity in quantities:
        if quantity in ("spectrum", "peaks"):
            continue
        if quantity == "qfi_approx":
            cf = closed_form_for(spec)
            low = np.empty_like(temperatures)
            high = np.empty_like(temperatures)
            for i, t in enumerate(temperatures):
                low[i], high[i], _ = qfi_approx(cf, float(t))
            columns["qfi_low"] = low
            columns["qfi_high"] = high
            columns["qfi_approx"] = low + high
        elif quantity == "dpopulation_approx":
            cf = closed_form_for(spec)
            low = np.empty_like(temperatures)
            high = np.empty_like(temperatures)
            for i, t in enumerate(temperatures):
                _, low[i], _, high[i] = population_approximations(cf, float(t))
            columns["dpopulation_low"] = low
            columns["dpopulation_high"] = high
        else:
            columns[quantity] = base[quantity]
    return columns


def peak_source_quantity(quantities) -> str | None:
    """Which column peak detection runs on: QFI when present, else dp/dT."""
    if "qfi" in quantities:
        return "qfi"
    if "dpopulation" in quantities:
        return "dpopulation"
    return None


def run_scenario(scenario: Scenario) -> ScenarioResult:
    """Evaluate every requested quantity on the grid (and per sweep value)."""
    temperatures = scenario.temperatures
    columns: dict[str, np.ndarray] = {}
    peaks: dict[str, list[Peak]] = {}
    source = peak_source_quantity(scenario.quantities)

    grid_note = f"T in [{scenario.t_min:g}, {scenario.t_max:g}]"
    if scenario.sweep is None:
        try:
            columns = _evaluate_columns(scenario.spec, temperatures, scenario.quantities)
        except (ValueError, RuntimeError, FloatingPointError) as exc:
            raise EvaluationError(f"evaluation failed on {grid_note}: {exc}") from exc
        if source is not None:
            peaks[source] = detect_peaks(temperatures, columns[source])
    else:
        parameter, values = scenario.sweep
        for value in values:
            try:
                spec = scenario.spec.replace_parameter(parameter, value)
                sub = _evaluate_columns(spec, temperatures, scenario.quantities)
            except (ValueError, RuntimeError, FloatingPointError) as exc:
                raise EvaluationError(
                    f"evaluation failed at {parameter} = {value:g} on {grid_note}: {exc}"
                ) from exc
            for name, column in sub.items():
                label = f"{name}[{parameter}={value:g}]"
                columns[label] = column
                if name == source:
                    peaks[label] = detect_peaks(temperatures, column)

    spectrum = spectrum_for(scenario.spec)
    predictions = predict_peaks(spectrum)
    curve = QfiCurve(temperatures=temperatures, values=columns)
    return ScenarioResult(
        scenario=scenario,
        curve=curve,
        peaks=peaks,
        spectrum=spectrum,
        predictions=predictions,
    )


# ---------------------------------------------------------------------------
# Config files
# ---------------------------------------------------------------------------


def _floats(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(tok) for tok in text.replace(",", " ").split())
    except ValueError as exc:
        raise ConfigError(f"expected a list of numbers, got {text!r}") from exc


def scenario_to_config(scenario: Scenario) -> str:
    """Render a scenario back into the INI config format."""
    spec = scenario.spec
    lines = [
        "[chain]",
        f"n_qubits = {spec.n_qubits}",
        "omegas = " + " ".join(f"{w:.17g}" for w in spec.omegas),
        "xx_couplings = " + " ".join(f"{j:.17g}" for j in spec.xx_couplings),
        "dm_couplings = " + " ".join(f"{g:.17g}" for g in spec.dm_couplings),
        "",
        "[grid]",
        f"t_min = {scenario.t_min:.17g}",
        f"t_max = {scenario.t_max:.17g}",
        f"n_points = {scenario.n_points}",
        "",
        "[quantities]",
        "names = " + " ".join(scenario.quantities),
    ]
    if scenario.sweep is not None:
        parameter, values = scenario.sweep
        lines += [
            "",
            "[sweep]",
            f"parameter = {parameter}",
            "values = " + " ".join(f"{v:.17g}" for v in values),
        ]
    return "\n".join(lines) + "\n"


def scenario_from_config(path: str | Path) -> Scenario:
    """Parse a scenario config file; malformed input raises ConfigError."""
    import configparser

    parser = configparser.ConfigParser(inline_comment_prefixes=(";", "#"))
    path = Path(path)
    if not path.exists():
        raise ConfigError(f"config file {path} does not exist")
    try:
        parser.read(path)
    except configparser.Error as exc:
        raise ConfigError(f"cannot parse {path}: {exc}") from exc

    try:
        chain = parser["chain"]
        spec = ChainSpec(
            n_qubits=int(chain["n_qubits"]),
            omegas=_floats(chain["omegas"]),
            xx_couplings=_floats(chain.get("xx_couplings", "")),
            dm_couplings=_floats(chain.get("dm_couplings", "")),
        )
        grid = parser["grid"] if parser.has_section("grid") else {}
        t_min = float(grid.get("t_min", 1e-3))
        t_max = float(grid.get("t_max", 10.0))
        n_points = int(grid.get("n_points", DEFAULT_N_POINTS))
        if parser.has_section("quantities"):
            quantities = tuple(parser["quantities"].get("names", "qfi").split())
        else:
            quantities = ("population", "dpopulation", "qfi")
        sweep = None
        if parser.has_section("sweep"):
            sweep_section = parser["sweep"]
            sweep = (sweep_section["parameter"].strip(), _floats(sweep_section["values"]))
        return Scenario(
            spec=spec,
            t_min=t_min,
            t_max=t_max,
            n_points=n_points,
            quantities=quantities,
            sweep=sweep,
        )
    except ConfigError:
        raise
    except (KeyError, ValueError) as exc:
        raise ConfigError(f"invalid scenario config {path}: {exc}") from exc


# ---------------------------------------------------------------------------
# Coupling optimization
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OptimizationStep:
    pass_index: int
    parameter: str
    value: float
    qfi: float


@dataclass(frozen=True)
class OptimizationResult:
    parameters: dict[str, float]
    qfi: float
    spec: ChainSpec
    trace: tuple[OptimizationStep, ...]


_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def _qfi_at(spec: ChainSpec, temperature: float) -> float:
    return float(fisher_curve(spec, np.array([temperature]))["qfi"][0])


def optimize_coupling(
    spec: ChainSpec,
    target_temperature: float,
    free_parameters: list[tuple[str, float, float]],
    passes: int = 2,
    relative_tolerance: float = 1e-8,
) -> OptimizationResult:
    """Maximize QFI at one temperature by coordinate-wise golden-section search.

    Each pass walks the free parameters in order and runs a golden-section
    maximization of QFI(target_temperature) over that parameter's bounds.
    Deterministic; the full evaluation trace is returned.
    """
    if not free_parameters:
        raise ConfigError("need at least one free parameter to optimize")
    if not target_temperature > 0.0:
        raise ValueError(f"target temperature must be positive, got {target_temperature}")
    for name, lo, hi in free_parameters:
        parse_parameter_name(name, spec.n_qubits)
        if not (math.isfinite(lo) and math.isfinite(hi)):
            raise ConfigError(f"bounds for {name} must be finite, got [{lo}, {hi}]")
        if lo > hi:
            raise ConfigError(f"empty feasible region for {name}: [{lo}, {hi}]")

    trace: list[OptimizationStep] = []
    current = spec

    def objective(name: str, value: float, pass_index: int) -> float:
        candidate = current.replace_parameter(name, value)
        result = _qfi_at(candidate, target_temperature)
        trace.append(OptimizationStep(pass_index, name, value, result))
        return result

    for pass_index in range(passes):
        for name, lo, hi in free_parameters:
            if lo == hi:
                objective(name, lo, pass_index)
                current = current.replace_parameter(name, lo)
                continue
            # golden section never samples the exact endpoints, so evaluate
            # them explicitly; boundary optima are common here
            candidates = [(objective(name, lo, pass_index), lo),
                          (objective(name, hi, pass_index), hi)]
            a, b = lo, hi
            c = b - _INVPHI * (b - a)
            d = a + _INVPHI * (b - a)
            fc = objective(name, c, pass_index)
            fd = objective(name, d, pass_index)
            tol = relative_tolerance * (hi - lo)
            while (b - a) > tol:
                if fc > fd:
                    b, d, fd = d, c, fc
                    c = b - _INVPHI * (b - a)
                    fc = objective(name, c, pass_index)
                else:
                    a, c, fc = c, d, fd
                    d = a + _INVPHI * (b - a)
                    fd = objective(name, d, pass_index)
            candidates.append((fc, c))
            candidates.append((fd, d))
            best = max(candidates, key=lambda pair: pair[0])[1]
            current = current.replace_parameter(name, best)

    best_parameters = {}
    for name, lo, hi in free_parameters:
        kind, index = parse_parameter_name(name, current.n_qubits)
        if kind == "omega":
            best_parameters[name] = current.omegas[index]
        elif kind == "J":
            best_parameters[name] = current.xx_couplings[index]
        else:
            best_parameters[name] = current.dm_couplings[index]
    return OptimizationResult(
        parameters=best_parameters,
        qfi=_qfi_at(current, target_temperature),
        spec=current,
        trace=tuple(trace),
    )
