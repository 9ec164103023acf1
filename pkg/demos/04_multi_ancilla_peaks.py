"""One QFI peak per well-separated transition channel.

Every ancilla added to the chain contributes one more transition energy.
If the frequency and coupling hierarchies keep those energies on distinct
scales, each channel produces its own QFI peak, at roughly |E|/2.4, and
each new peak sits at a colder temperature than the last.  This script
walks chains of 2 to 5 qubits and compares detected peaks against the
transcendental-equation predictions.
"""

import numpy as np

from chainthermo import (
    ChainSpec,
    detect_peaks,
    fisher_curve,
    predict_peaks,
    solve_peak_equation,
    spectrum_for,
)

print(f"universal peak ratio: T*/|E| = {solve_peak_equation(1.0):.6f} (= 1/2.3994)\n")

chains = {
    2: ChainSpec.two_qubit(0.04, 1.0, 0.05, 0.03),
    3: ChainSpec(3, (0.04, 0.4, 1.0), (0.06, 0.4), (0.04, 0.4)),
    4: ChainSpec(4, (0.004, 0.04, 0.4, 1.0), (0.0008, 0.08, 0.4), (0.006, 0.06, 0.4)),
    5: ChainSpec(
        5,
        (0.0004, 0.004, 0.04, 0.4, 1.0),
        (0.00095, 0.008, 0.08, 0.4),
        (0.0005, 0.005, 0.06, 0.2),
    ),
}

for n, spec in chains.items():
    spectrum = spectrum_for(spec)
    predictions = sorted(t for _, t in predict_peaks(spectrum))
    grid = np.geomspace(min(predictions) / 30.0, 3.0, 1000)
    curve = fisher_curve(spec, grid)["qfi"]
    peaks = detect_peaks(grid, curve)
    print(f"N = {n}: {len(peaks)} QFI peaks")
    for peak in peaks:
        nearest = min(predictions, key=lambda p: abs(np.log(p / peak.temperature)))
        print(f"   detected T = {peak.temperature:.5g}  (predicted {nearest:.5g}, "
              f"ratio {peak.temperature / nearest:.2f})")
    print()

print("each added ancilla contributes one colder peak: the coldest detected")
print("temperatures above span three orders of magnitude from N=2 to N=5.")
