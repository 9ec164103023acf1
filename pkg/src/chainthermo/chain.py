"""Qubit-chain parameterization and Hamiltonian construction.

A chain of N qubits with nearest-neighbour symmetric (XX) and antisymmetric
(DM) exchange:

    H = sum_i (omega_i/2) sz_i
      + sum_i J_i (sx_i sx_{i+1} + sy_i sy_{i+1})
      + sum_i g_i (sx_i sy_{i+1} - sy_i sx_{i+1})

Qubit N is the probe and carries the reference frequency; every energy in
this package is expressed in units of the probe frequency (k_B = hbar = 1).

Conventions used throughout:
  * tensor factor order: qubit 1 is the most significant factor, the probe
    (qubit N) the least significant, so tracing down to the probe is a
    contiguous 2x2 block reduction;
  * basis index 0 of a single qubit is the sz = +1 (excited) state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce

import numpy as np

MAX_QUBITS = 12  # dense 2^N storage; 4096^2 complex is the practical ceiling

_PAULI = {
    "x": np.array([[0.0, 1.0], [1.0, 0.0]], dtype=np.complex128),
    "y": np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=np.complex128),
    "z": np.array([[1.0, 0.0], [0.0, -1.0]], dtype=np.complex128),
}

_IDENTITY = np.eye(2, dtype=np.complex128)


@dataclass(frozen=True)
class ChainSpec:
    """Full parameterization of a probe + ancilla qubit chain.

    ``omegas[i]`` is the frequency of qubit i+1; the last entry is the probe.
    ``xx_couplings[i]`` / ``dm_couplings[i]`` couple qubits i+1 and i+2.
    """

    n_qubits: int
    omegas: tuple[float, ...]
    xx_couplings: tuple[float, ...]
    dm_couplings: tuple[float, ...]

    def __post_init__(self):
        n = self.n_qubits
        if n < 2:
            raise ValueError(f"chain needs at least 2 qubits, got {n}")
        if n > MAX_QUBITS:
            raise ValueError(f"dense representation capped at {MAX_QUBITS} qubits, got {n}")
        object.__setattr__(self, "omegas", tuple(float(w) for w in self.omegas))
        object.__setattr__(self, "xx_couplings", tuple(float(j) for j in self.xx_couplings))
        object.__setattr__(self, "dm_couplings", tuple(float(g) for g in self.dm_couplings))
        if len(self.omegas) != n:
            raise ValueError(f"expected {n} frequencies, got {len(self.omegas)}")
        if len(self.xx_couplings) != n - 1:
            raise ValueError(f"expected {n - 1} XX couplings, got {len(self.xx_couplings)}")
        if len(self.dm_couplings) != n - 1:
            raise ValueError(f"expected {n - 1} DM couplings, got {len(self.dm_couplings)}")
        values = self.omegas + self.xx_couplings + self.dm_couplings
        if not all(math.isfinite(v) for v in values):
            raise ValueError("chain parameters must be finite")
        if any(w <= 0.0 for w in self.omegas):
            raise ValueError("qubit frequencies must be positive")

    @property
    def probe_frequency(self) -> float:
        return self.omegas[-1]

    @property
    def dimension(self) -> int:
        return 2**self.n_qubits

    @classmethod
    def two_qubit(cls, omega_a: float, omega_p: float, j: float, g: float) -> "ChainSpec":
        """Ancilla (qubit 1) + probe (qubit 2) pair."""
        return cls(2, (omega_a, omega_p), (j,), (g,))

    def replace_parameter(self, name: str, value: float) -> "ChainSpec":
        """Return a copy with one named parameter replaced.

        Names are 1-based: ``omega3`` / ``w3``, ``J2``, ``g1``.
        """
        kind, index = parse_parameter_name(name, self.n_qubits)
        if kind == "omega":
            omegas = list(self.omegas)
            omegas[index] = value
            return ChainSpec(self.n_qubits, tuple(omegas), self.xx_couplings, self.dm_couplings)
        if kind == "J":
            xx = list(self.xx_couplings)
            xx[index] = value
            return ChainSpec(self.n_qubits, self.omegas, tuple(xx), self.dm_couplings)
        dm = list(self.dm_couplings)
        dm[index] = value
        return ChainSpec(self.n_qubits, self.omegas, self.xx_couplings, tuple(dm))


def parse_parameter_name(name: str, n_qubits: int) -> tuple[str, int]:
    """Split a selector like ``g2`` into ("g", 1); index is 0-based on return."""
    stripped = name.strip().replace("_", "")
    for prefix, kind, count in (
        ("omega", "omega", n_qubits),
        ("w", "omega", n_qubits),
        ("J", "J", n_qubits - 1),
        ("j", "J", n_qubits - 1),
        ("g", "g", n_qubits - 1),
    ):
        if stripped.startswith(prefix) and stripped[len(prefix):].isdigit():
            index = int(stripped[len(prefix):])
            if not 1 <= index <= count:
                raise ValueError(f"parameter {name!r} out of range (1..{count})")
            return kind, index - 1
    raise ValueError(f"unknown parameter selector {name!r}")


def _embed(factors_by_site: dict[int, np.ndarray], n_qubits: int) -> np.ndarray:
    """Tensor product with the given 1-based site factors, identity elsewhere."""
    factors = [_IDENTITY] * n_qubits
    for site, op in factors_by_site.items():
        factors[site - 1] = op
    return reduce(np.kron, factors)


def pauli_at(site: int, axis: str, n_qubits: int) -> np.ndarray:
    """Pauli operator on one site, identity elsewhere.

    ``site`` is 1-based; site 1 is the most significant tensor factor.
    """
    if axis not in _PAULI:
        raise ValueError(f"axis must be one of x, y, z, got {axis!r}")
    if not 1 <= site <= n_qubits:
        raise ValueError(f"site {site} out of range for {n_qubits} qubits")
    return _embed({site: _PAULI[axis]}, n_qubits)


def total_sz(n_qubits: int) -> np.ndarray:
    """Sum of sz over all sites (conserved by the chain Hamiltonian)."""
    return sum(pauli_at(i, "z", n_qubits) for i in range(1, n_qubits + 1))


def build_hamiltonian(spec: ChainSpec) -> np.ndarray:
    """Dense 2^N x 2^N chain Hamiltonian for the given parameterization."""
    n = spec.n_qubits
    dim = spec.dimension
    sx, sy, sz = _PAULI["x"], _PAULI["y"], _PAULI["z"]
    h = np.zeros((dim, dim), dtype=np.complex128)
    for i in range(1, n + 1):
        h += 0.5 * spec.omegas[i - 1] * _embed({i: sz}, n)
    for i in range(1, n):
        h += spec.xx_couplings[i - 1] * (
            _embed({i: sx, i + 1: sx}, n) + _embed({i: sy, i + 1: sy}, n)
        )
        h += spec.dm_couplings[i - 1] * (
            _embed({i: sx, i + 1: sy}, n) - _embed({i: sy, i + 1: sx}, n)
        )
    return h


@dataclass(frozen=True)
class TwoQubitClosedForm:
    """Closed-form spectral data for an ancilla-probe pair.

    ``omega_s`` is the mean frequency, ``omega_d`` half the ancilla-probe
    detuning (ancilla minus probe; this sign makes every thermal closed form
    below agree with direct diagonalization), ``eta`` the dressed splitting,
    ``delta`` the eigenvector normalization, ``theta`` the mixing angle and
    ``coupling_phase`` the unit complex number (J + i g)/|J + i g| carried by
    the two-qubit coherence.  ``omega_minus``/``omega_plus`` are the two
    transition energies omega_s -/+ eta.
    """

    omega_s: float
    omega_d: float
    eta: float
    delta: float
    theta: float
    omega_minus: float
    omega_plus: float
    coupling_phase: complex

    def chi_at(self, temperature: float) -> float:
        """cosh(eta/T) + cosh(omega_s/T); overflows for T << omega_s.

        Prefer the shifted Boltzmann forms in :mod:`chainthermo.gibbs` at low
        temperature; this direct value is exposed for moderate-T checks.
        """
        _require_positive_temperature(temperature)
        return math.cosh(self.eta / temperature) + math.cosh(self.omega_s / temperature)

    @property
    def cos_2theta(self) -> float:
        return math.cos(2.0 * self.theta)

    @property
    def cos_sq_theta(self) -> float:
        return math.cos(self.theta) ** 2

    @property
    def sin_sq_theta(self) -> float:
        return math.sin(self.theta) ** 2


def _require_positive_temperature(temperature: float) -> None:
    if not temperature > 0.0:
        raise ValueError(f"temperature must be positive, got {temperature}")


def two_qubit_closed_form(
    omega_a: float, omega_p: float, j: float, g: float
) -> TwoQubitClosedForm:
    """Spectral closed forms for the two-qubit chain.

    The pair Hamiltonian has eigenvalues {+-omega_s, +-eta}.  The mixing
    angle satisfies theta = arcsin((omega_d - eta)/delta) and vanishes in the
    degenerate decoupled case delta = 0.
    """
    for name, v in (("omega_a", omega_a), ("omega_p", omega_p), ("j", j), ("g", g)):
        if not math.isfinite(v):
            raise ValueError(f"{name} must be finite, got {v}")
    omega_s = 0.5 * (omega_p + omega_a)
    omega_d = 0.5 * (omega_a - omega_p)
    eta = math.sqrt(omega_d**2 + 4.0 * g**2 + 4.0 * j**2)
    delta = math.sqrt(4.0 * j**2 + 4.0 * g**2 + (omega_d - eta) ** 2)
    # the sine is in [-1, 0] analytically; clamp away one-ulp excursions
    theta = math.asin(max(-1.0, (omega_d - eta) / delta)) if delta > 0.0 else 0.0
    coupling_norm = math.hypot(j, g)
    phase = complex(j, g) / coupling_norm if coupling_norm > 0.0 else complex(1.0, 0.0)
    return TwoQubitClosedForm(
        omega_s=omega_s,
        omega_d=omega_d,
        eta=eta,
        delta=delta,
        theta=theta,
        omega_minus=omega_s - eta,
        omega_plus=omega_s + eta,
        coupling_phase=phase,
    )


def closed_form_for(spec: ChainSpec) -> TwoQubitClosedForm:
    """Closed forms for a two-qubit ChainSpec (ancilla first, probe last)."""
    if spec.n_qubits != 2:
        raise ValueError("closed forms are defined for two-qubit chains only")
    return two_qubit_closed_form(
        spec.omegas[0], spec.omegas[1], spec.xx_couplings[0], spec.dm_couplings[0]
    )
