"""Tuning a coupling to sharpen the coldest QFI peak.

The height of each QFI peak is controlled by the coupling feeding its
channel, so a deterministic golden-section search over one or two couplings
is enough to optimize precision at a chosen temperature.  Here we tune the
innermost DM coupling of a four-qubit chain to maximize the QFI at the
coldest peak.
"""

import numpy as np

from chainthermo import ChainSpec, fisher_curve, predict_peaks, spectrum_for
from chainthermo.scenario import optimize_coupling

spec = ChainSpec(4, (0.004, 0.04, 0.4, 1.0), (0.0008, 0.08, 0.4), (0.006, 0.06, 0.4))

# target: the coldest predicted peak of the starting chain
target = sorted(t for _, t in predict_peaks(spectrum_for(spec)))[0]
start = fisher_curve(spec, np.array([target]))["qfi"][0]
print(f"target temperature T = {target:.5f}; starting QFI = {start:.4f}")

result = optimize_coupling(spec, target, [("g1", 0.005, 0.007)])
print(f"optimized g1 = {result.parameters['g1']:.6f} "
      f"(bounds [0.005, 0.007]); QFI = {result.qfi:.4f}")
print(f"improvement: x{result.qfi / start:.2f} in {len(result.trace)} evaluations")

# a two-parameter search: trade g1 against the chain-interior XX coupling
result2 = optimize_coupling(
    spec, target, [("g1", 0.005, 0.007), ("J1", 0.0005, 0.002)], passes=2
)
print("\ntwo-parameter search:")
for name, value in result2.parameters.items():
    print(f"  {name} = {value:.6f}")
print(f"  QFI = {result2.qfi:.4f}")

print("\nthe search walks parameters coordinate-wise, twice, with a")
print("deterministic golden-section bracket per coordinate; rerunning this")
print("script reproduces the trace bit for bit.")
