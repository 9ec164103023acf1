"""Thermal (Gibbs) states of the chain and reduction to the probe qubit.

The chain thermalizes to rho = exp(-H/T)/Z.  Everything here is built from
the spectral decomposition of H; Boltzmann weights are always evaluated with
the ground-state energy subtracted, so temperatures down to 1e-6 (in probe
units) stay in range of double precision.

The probe's reduced state is diagonal for every chain in this family, so a
single population p(T) carries all temperature information.  The temperature
derivative of p is computed analytically through the eigenbasis identity

    d lambda_k / dT = lambda_k (E_k - <H>) / T^2

rather than by finite differences, which would be hopelessly noisy where the
Fisher information divides by p(1-p).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .chain import ChainSpec, TwoQubitClosedForm, build_hamiltonian

HERMITICITY_TOL = 1e-10


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenvalues (ascending) and unitary eigenvector matrix of a Hermitian operator."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def dimension(self) -> int:
        return self.eigenvalues.shape[0]


@dataclass(frozen=True)
class GibbsState:
    """Normalized Boltzmann weights over an eigenbasis at one temperature."""

    decomposition: SpectralDecomposition
    temperature: float
    weights: np.ndarray
    log_partition: float


@dataclass(frozen=True)
class ProbeState:
    """Reduced probe qubit: excited (spin-up) population and coherence magnitude."""

    p: float
    coherence_magnitude: float


def eigendecompose(h: np.ndarray) -> SpectralDecomposition:
    """Diagonalize a Hermitian matrix; eigensolver failures are surfaced."""
    h = np.asarray(h)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {h.shape}")
    if np.max(np.abs(h - h.conj().T)) > HERMITICITY_TOL * max(1.0, np.max(np.abs(h))):
        raise ValueError("matrix is not Hermitian")
    try:
        eigenvalues, eigenvectors = np.linalg.eigh(h)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - eigh rarely fails
        raise RuntimeError("eigendecomposition did not converge") from exc
    return SpectralDecomposition(eigenvalues=eigenvalues, eigenvectors=eigenvectors)


def boltzmann_weights(energies: np.ndarray, temperature: float) -> tuple[np.ndarray, float]:
    """Normalized exp(-E/T) weights and log Z, shifted by min(E) against overflow."""
    if not temperature > 0.0:
        raise ValueError(f"temperature must be positive, got {temperature}")
    energies = np.asarray(energies, dtype=float)
    e_min = energies.min()
    raw = np.exp(-(energies - e_min) / temperature)
    norm = raw.sum()
    log_partition = math.log(norm) - e_min / temperature
    return raw / norm, log_partition


def gibbs_weights(decomposition: SpectralDecomposition, temperature: float) -> GibbsState:
    weights, log_partition = boltzmann_weights(decomposition.eigenvalues, temperature)
    return GibbsState(
        decomposition=decomposition,
        temperature=temperature,
        weights=weights,
        log_partition=log_partition,
    )


def gibbs_density_matrix(decomposition: SpectralDecomposition, temperature: float) -> np.ndarray:
    """Full-chain thermal density matrix V diag(weights) V^dagger."""
    state = gibbs_weights(decomposition, temperature)
    v = decomposition.eigenvectors
    return (v * state.weights) @ v.conj().T


def partial_trace_to_probe(rho: np.ndarray, n_qubits: int) -> np.ndarray:
    """Trace out qubits 1..N-1, keeping the probe (least significant factor)."""
    dim_anc = 2 ** (n_qubits - 1)
    blocks = rho.reshape(dim_anc, 2, dim_anc, 2)
    return np.einsum("aiaj->ij", blocks)


@lru_cache(maxsize=128)
def _chain_eigensystem(spec: ChainSpec) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Eigenvalues plus per-eigenstate probe amplitudes for a chain.

    Returns (E, up, cross): ``up[k]`` is the probe spin-up weight of
    eigenstate k and ``cross[k]`` its contribution to the probe off-diagonal
    element <0|rho_p|1>.
    """
    decomposition = eigendecompose(build_hamiltonian(spec))
    dim_anc = 2 ** (spec.n_qubits - 1)
    vectors = decomposition.eigenvectors.reshape(dim_anc, 2, -1)
    up = np.einsum("ak,ak->k", vectors[:, 0, :], vectors[:, 0, :].conj()).real
    cross = np.einsum("ak,ak->k", vectors[:, 0, :], vectors[:, 1, :].conj())
    return decomposition.eigenvalues, up, cross


def chain_decomposition(spec: ChainSpec) -> SpectralDecomposition:
    return eigendecompose(build_hamiltonian(spec))


def probe_state(spec: ChainSpec, temperature: float) -> ProbeState:
    """Reduce the chain Gibbs state to the probe qubit."""
    energies, up, cross = _chain_eigensystem(spec)
    weights, _ = boltzmann_weights(energies, temperature)
    p = float(weights @ up)
    coherence = complex(weights @ cross)
    return ProbeState(p=p, coherence_magnitude=abs(coherence))


def probe_population(spec: ChainSpec, temperature: float) -> float:
    return probe_state(spec, temperature).p


def probe_density_matrix(spec: ChainSpec, temperature: float) -> np.ndarray:
    """2x2 reduced probe state, including any (numerically zero) coherence."""
    energies, up, cross = _chain_eigensystem(spec)
    weights, _ = boltzmann_weights(energies, temperature)
    p = float(weights @ up)
    c = complex(weights @ cross)
    return np.array([[p, c], [np.conj(c), 1.0 - p]], dtype=np.complex128)


def thermal_covariance(
    energies: np.ndarray, weights: np.ndarray, values: np.ndarray
) -> float:
    """Weighted covariance sum_k w_k (E_k - <E>)(x_k - <x>).

    The temperature derivative of any Boltzmann average <x> equals this
    covariance divided by T^2.  Both factors are centered so that round-off
    scales with the covariance itself rather than with the raw energy
    spread, which matters wherever d<x>/dT is exponentially small.
    """
    mean_energy = float(weights @ energies)
    mean_value = float(weights @ values)
    return float((weights * (energies - mean_energy)) @ (values - mean_value))


def probe_population_derivative(spec: ChainSpec, temperature: float) -> float:
    """Analytic dp/dT through the eigenbasis weight-derivative identity."""
    energies, up, _ = _chain_eigensystem(spec)
    weights, _ = boltzmann_weights(energies, temperature)
    return thermal_covariance(energies, weights, up) / temperature**2


def probe_population_curve(
    spec: ChainSpec, temperatures: np.ndarray
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Vectorized (p, dp/dT, |coherence|) over a temperature grid."""
    energies, up, cross = _chain_eigensystem(spec)
    temperatures = np.asarray(temperatures, dtype=float)
    if np.any(temperatures <= 0.0):
        raise ValueError("temperatures must be positive")
    shifted = -(energies[None, :] - energies.min()) / temperatures[:, None]
    raw = np.exp(shifted)
    weights = raw / raw.sum(axis=1, keepdims=True)
    populations = weights @ up
    mean_energy = weights @ energies
    centered = weights * (energies[None, :] - mean_energy[:, None])
    derivatives = (
        np.einsum("tk,tk->t", centered, up[None, :] - populations[:, None])
        / temperatures**2
    )
    coherences = np.abs(weights @ cross)
    return populations, derivatives, coherences


# ---------------------------------------------------------------------------
# Two-qubit closed forms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TwoQubitThermalState:
    """Thermal two-qubit X state: populations d1..d4 and coherence c.

    Basis order is (both up, ancilla up, probe up, both down); c sits between
    the two singly-excited states.
    """

    d1: float
    d2: float
    d3: float
    d4: float
    c: complex

    def density_matrix(self) -> np.ndarray:
        rho = np.zeros((4, 4), dtype=np.complex128)
        rho[0, 0] = self.d1
        rho[1, 1] = self.d2
        rho[2, 2] = self.d3
        rho[3, 3] = self.d4
        rho[1, 2] = self.c
        rho[2, 1] = np.conj(self.c)
        return rho

    @property
    def probe_population(self) -> float:
        return self.d1 + self.d3


def _closed_form_levels(cf: TwoQubitClosedForm) -> tuple[np.ndarray, np.ndarray]:
    """Pair eigenvalues and the probe spin-up weight of each eigenstate."""
    energies = np.array([cf.omega_s, cf.eta, -cf.eta, -cf.omega_s])
    up = np.array([1.0, cf.sin_sq_theta, cf.cos_sq_theta, 0.0])
    return energies, up


def two_qubit_population(cf: TwoQubitClosedForm, temperature: float) -> float:
    """Excited probe population of the thermal pair, overflow-safe.

    Equivalent to (cos(2 theta) sinh(eta/T) + chi - sinh(omega_s/T)) / (2 chi)
    but evaluated as a shifted Boltzmann average so it survives T << omega_s.
    """
    energies, up = _closed_form_levels(cf)
    weights, _ = boltzmann_weights(energies, temperature)
    return float(weights @ up)


def two_qubit_population_derivative(cf: TwoQubitClosedForm, temperature: float) -> float:
    """Analytic dp/dT of the two-qubit closed-form population."""
    energies, up = _closed_form_levels(cf)
    weights, _ = boltzmann_weights(energies, temperature)
    return thermal_covariance(energies, weights, up) / temperature**2


def two_qubit_thermal_state(cf: TwoQubitClosedForm, temperature: float) -> TwoQubitThermalState:
    """Closed-form thermal X state of the pair (populations and coherence)."""
    if not temperature > 0.0:
        raise ValueError(f"temperature must be positive, got {temperature}")
    a = cf.eta / temperature
    b = cf.omega_s / temperature
    m = max(a, b)
    ea, eia = math.exp(a - m), math.exp(-a - m)
    eb, eib = math.exp(b - m), math.exp(-b - m)
    denom = ea + eia + eb + eib  # = 2 chi * exp(-m)
    cos_sq = cf.cos_sq_theta
    sin_sq = cf.sin_sq_theta
    d1 = eib / denom
    d2 = (cos_sq * eia + sin_sq * ea) / denom
    d3 = (sin_sq * eia + cos_sq * ea) / denom
    d4 = eb / denom
    sin_2theta = math.sin(2.0 * cf.theta)
    c = cf.coupling_phase * sin_2theta * (0.5 * (ea - eia)) / denom
    return TwoQubitThermalState(d1=d1, d2=d2, d3=d3, d4=d4, c=c)
