"""Which measurement extracts the temperature information?

The probe's thermal state carries no coherence, so all the temperature
information lives in the populations.  Consequences, all checked here:

  * the classical Fisher information of a population measurement equals
    the QFI exactly;
  * a sz measurement saturates the quantum Cramer-Rao bound;
  * a sx measurement is blind to T.
"""

import numpy as np

from chainthermo import (
    ChainSpec,
    fisher_curve,
    observable_fisher,
    probe_density_matrix,
)

spec = ChainSpec.two_qubit(1.0, 1.0, 0.04, 0.02)

# the reduced probe state is diagonal at every temperature
for t in (0.05, 0.5, 5.0):
    rho = probe_density_matrix(spec, t)
    print(f"T = {t:4.2f}: p = {rho[0, 0].real:.6f}, |coherence| = {abs(rho[0, 1]):.2e}")

grid = np.geomspace(0.05, 5.0, 200)
curve = fisher_curve(spec, grid)

mask = curve["qfi"] > 1e-12
print("\nmax |QFI - CFI| / QFI   =",
      f"{np.max(np.abs(curve['qfi'][mask] - curve['cfi'][mask]) / curve['qfi'][mask]):.2e}")
print("max |QFI - F(sz)| / QFI =",
      f"{np.max(np.abs(curve['qfi'][mask] - curve['fi_sigma_z'][mask]) / curve['qfi'][mask]):.2e}")
print("max F(sx)               =", f"{np.max(curve['fi_sigma_x']):.2e}")

t = 0.4
print(f"\nat T = {t}:")
print(f"  F(sz) = {observable_fisher(spec, t, 'sigma_z'):.6f}")
print(f"  F(sx) = {observable_fisher(spec, t, 'sigma_x'):.2e}")
print("\nreading the probe in its energy basis is optimal; transverse")
print("measurements return nothing.")
