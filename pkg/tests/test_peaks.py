import math

import numpy as np
import pytest

from chainthermo import (
    ChainSpec,
    detect_peaks,
    fisher_curve,
    predict_peaks,
    solve_peak_equation,
    spectrum_for,
    universal_peak_ratio,
)
from chainthermo.fermion import TransitionSpectrum
from chainthermo.presets import PRESETS


def bisect_peak_ratio() -> float:
    """Bisection oracle for the root of f(t) = t - tanh(1/(2t))/2 on (0.3, 0.5)."""
    lo, hi = 0.3, 0.5
    f = lambda t: t - 0.5 * math.tanh(0.5 / t)
    assert f(lo) < 0.0 < f(hi)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if f(lo) * f(mid) <= 0.0:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


class TestSolvePeakEquation:
    def test_unit_channel_against_bisection_oracle(self):
        expected = bisect_peak_ratio()  # 0.41677827980...
        assert math.isclose(solve_peak_equation(1.0), expected, rel_tol=1e-10)

    def test_satisfies_defining_equation(self):
        for energy in (1.0, 0.026, 3.7, -0.4):
            t_star = solve_peak_equation(energy)
            rhs = 0.5 * abs(energy) * math.tanh(0.5 * abs(energy) / t_star)
            assert math.isclose(t_star, rhs, rel_tol=1e-10)

    def test_scale_covariance(self):
        base = solve_peak_equation(1.0)
        for energy in (1e-4, 0.3, 42.0):
            assert math.isclose(solve_peak_equation(energy), abs(energy) * base, rel_tol=1e-14)

    def test_zero_channel_rejected(self):
        with pytest.raises(ValueError):
            solve_peak_equation(0.0)

    def test_universal_ratio_near_published_constant(self):
        assert abs(universal_peak_ratio() - 1.0 / 2.4007) <= 1e-3


class TestDetectPeaks:
    def test_off_resonant_qfi_has_two_peaks(self):
        spec = ChainSpec.two_qubit(0.04, 1.0, 0.05, 0.03)
        grid = np.geomspace(1e-3, 3.0, 400)
        values = fisher_curve(spec, grid)["qfi"]
        assert len(detect_peaks(grid, values)) == 2

    def test_monotone_curve_has_no_peaks(self):
        grid = np.geomspace(0.01, 10.0, 50)
        assert detect_peaks(grid, np.linspace(0.0, 1.0, 50)) == []

    def test_five_qubit_preset_has_five_peaks(self):
        scenario = PRESETS["fig10a"].scenario
        grid = np.geomspace(1e-5, 3.0, 1000)
        values = fisher_curve(scenario.spec, grid)["qfi"]
        assert len(detect_peaks(grid, values)) == 5

    def test_needs_three_samples(self):
        with pytest.raises(ValueError):
            detect_peaks(np.array([1.0, 2.0]), np.array([0.0, 1.0]))

    def test_grid_must_increase(self):
        with pytest.raises(ValueError):
            detect_peaks(np.array([1.0, 1.0, 2.0]), np.array([0.0, 1.0, 0.0]))

    def test_endpoints_never_count(self):
        grid = np.geomspace(0.1, 10.0, 30)
        values = np.concatenate([[5.0], np.linspace(1.0, 0.0, 29)])
        assert detect_peaks(grid, values) == []

    def test_rescaling_heights_keeps_peak_temperatures(self):
        spec = ChainSpec.two_qubit(0.04, 1.0, 0.05, 0.03)
        grid = np.geomspace(1e-3, 3.0, 400)
        values = fisher_curve(spec, grid)["qfi"]
        base = detect_peaks(grid, values)
        # powers of two rescale exactly, so the refined positions are bit-identical
        for factor in (0.25, 1024.0):
            scaled = detect_peaks(grid, factor * values)
            assert [p.temperature for p in base] == [p.temperature for p in scaled]
        # arbitrary positive factors agree to rounding
        loose = detect_peaks(grid, 1742.0 * values)
        assert len(loose) == len(base)
        for a, b in zip(base, loose):
            assert math.isclose(a.temperature, b.temperature, rel_tol=1e-9)

    def test_shallow_dip_merges_into_single_peak(self):
        # two maxima whose separating dip is under 1% of the global maximum
        grid = np.geomspace(0.1, 10.0, 101)
        x = np.linspace(-1.0, 1.0, 101)
        values = 1.0 - x**2 + 0.004 * np.cos(12.0 * x)
        peaks = detect_peaks(grid, values)
        assert len(peaks) == 1

    def test_prominence_reported(self):
        grid = np.geomspace(0.01, 100.0, 200)
        x = np.log(grid)
        values = np.exp(-((x + 2.0) ** 2)) + 0.5 * np.exp(-((x - 2.0) ** 2))
        peaks = detect_peaks(grid, values)
        assert len(peaks) == 2
        assert peaks[0].prominence > peaks[1].prominence > 0.0


class TestPredictPeaks:
    def test_two_qubit_predictions_are_order_of_magnitude_markers(self):
        spectrum = spectrum_for(ChainSpec.two_qubit(0.04, 1.0, 0.05, 0.03))
        predictions = predict_peaks(spectrum)
        t_values = [t for _, t in predictions]
        assert abs(t_values[0] - 0.0108) < 0.0005
        assert abs(t_values[1] - 0.4226) < 0.001

    def test_degenerate_channels_give_duplicate_predictions(self):
        spectrum = TransitionSpectrum(np.array([0.5, 0.5]), np.array([0.5, 0.5]))
        predictions = predict_peaks(spectrum)
        assert predictions[0] == predictions[1]

    def test_three_qubit_predictions_track_detected_peaks(self):
        # oracle: peaks detected on the exact QFI curve of the fig8a preset
        scenario = PRESETS["fig8a"].scenario
        grid = np.geomspace(1e-3, 3.0, 600)
        values = fisher_curve(scenario.spec, grid)["qfi"]
        detected = detect_peaks(grid, values)
        predictions = sorted(t for _, t in predict_peaks(spectrum_for(scenario.spec)))
        assert len(detected) == len(predictions) == 3
        for peak, predicted in zip(detected, predictions):
            assert predicted / 2.0 <= peak.temperature <= 2.0 * predicted


class TestPresetPeakCounts:
    @pytest.mark.parametrize(
        "name,quantity,count",
        [
            ("fig3a", "dpopulation", 1),
            ("fig3b", "dpopulation", 2),
            ("fig5a", "qfi", 2),
            ("fig5b", "qfi", 1),
            ("fig8a", "qfi", 3),
            ("fig8b", "qfi", 3),
            ("fig8c", "qfi", 2),  # strongest coupling: the two upper peaks merge
            ("fig9a", "qfi", 4),
            ("fig9b", "qfi", 4),
            ("fig9c", "qfi", 4),
            ("fig10a", "qfi", 5),
            ("fig10b", "qfi", 5),
            ("fig10c", "qfi", 5),
        ],
    )
    def test_canonical_counts(self, name, quantity, count):
        from chainthermo.scenario import run_scenario

        result = run_scenario(PRESETS[name].scenario)
        for column, peaks in result.peaks.items():
            assert column.startswith(quantity)
            assert len(peaks) == count, f"{name}/{column}: {[p.temperature for p in peaks]}"
