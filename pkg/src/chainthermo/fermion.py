"""Free-fermion route to the probe population.

Mapping the chain onto spinless fermions turns the 2^N thermal problem into
the N x N Hermitian tridiagonal matrix

    M[i, i]   = omega_i
    M[i, i+1] = 2 (J_i + i g_i)
    M[i+1, i] = 2 (J_i - i g_i)

whose eigenvalues E_l are the transition energies the bath can drive.  The
chain Hamiltonian equals sum_ij M_ij c_i^dag c_j minus the constant
sum_i omega_i / 2, so the spin and fermion partition functions differ by
exactly that constant.  The probe occupation is a Fermi-weighted sum over
the transition spectrum,

    p(T) = sum_l |U_{N,l}|^2 / (1 + exp(E_l / T)),

which serves as an O(N) oracle for the exact-diagonalization path and is the
workhorse for larger chains.

An N-qubit chain therefore carries at most N distinct transition energies,
one per eigenvalue of M.  (Counting arguments phrased per added ancilla
sometimes quote N + 1 channels for N - 1 ancillas; the single-particle
spectrum bounds the number at N, which is what this module computes and
what the peak analytics consume.)
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import expit

from .chain import ChainSpec


@dataclass(frozen=True)
class TransitionSpectrum:
    """Transition energies E_l (ascending) and probe weights |U_{N,l}|^2."""

    energies: np.ndarray
    probe_weights: np.ndarray

    @property
    def size(self) -> int:
        return self.energies.shape[0]


def build_m_matrix(spec: ChainSpec) -> np.ndarray:
    """Hermitian tridiagonal single-particle matrix of the chain."""
    n = spec.n_qubits
    m = np.zeros((n, n), dtype=np.complex128)
    m[np.arange(n), np.arange(n)] = spec.omegas
    hop = 2.0 * (np.asarray(spec.xx_couplings) + 1.0j * np.asarray(spec.dm_couplings))
    m[np.arange(n - 1), np.arange(1, n)] = hop
    m[np.arange(1, n), np.arange(n - 1)] = hop.conj()
    return m


def transition_spectrum(m: np.ndarray) -> TransitionSpectrum:
    """Diagonalize M; the probe row of the unitary gives the channel weights."""
    m = np.asarray(m)
    if np.max(np.abs(m - m.conj().T)) > 1e-10 * max(1.0, np.max(np.abs(m))):
        raise ValueError("M matrix must be Hermitian")
    try:
        energies, unitary = np.linalg.eigh(m)
    except np.linalg.LinAlgError as exc:  # pragma: no cover
        raise RuntimeError("transition-spectrum eigensolver did not converge") from exc
    probe_weights = np.abs(unitary[-1, :]) ** 2
    return TransitionSpectrum(energies=energies, probe_weights=probe_weights)


def spectrum_for(spec: ChainSpec) -> TransitionSpectrum:
    return transition_spectrum(build_m_matrix(spec))


def log_partition_function(spectrum: TransitionSpectrum, temperature: float) -> float:
    """log Z = sum_l log(1 + exp(-E_l/T)) in softplus form (no overflow).

    This is the fermionic partition function; the spin-space log Z equals it
    plus sum_i omega_i / (2T).
    """
    if not temperature > 0.0:
        raise ValueError(f"temperature must be positive, got {temperature}")
    x = -spectrum.energies / temperature
    return float(np.sum(np.maximum(x, 0.0) + np.log1p(np.exp(-np.abs(x)))))


def fermionic_probe_population(spectrum: TransitionSpectrum, temperature: float) -> float:
    """Probe occupation as a Fermi-function average over the channels."""
    if not temperature > 0.0:
        raise ValueError(f"temperature must be positive, got {temperature}")
    occupations = expit(-spectrum.energies / temperature)
    return float(spectrum.probe_weights @ occupations)


def fermionic_probe_population_derivative(
    spectrum: TransitionSpectrum, temperature: float
) -> float:
    """Analytic dp/dT: each channel contributes E_l f(1 - f) / T^2."""
    if not temperature > 0.0:
        raise ValueError(f"temperature must be positive, got {temperature}")
    f = expit(-spectrum.energies / temperature)
    return float(
        spectrum.probe_weights @ (spectrum.energies * f * (1.0 - f)) / temperature**2
    )


def transitions_vs_parameter(
    spec: ChainSpec, parameter: str, grid: np.ndarray
) -> np.ndarray:
    """Transition energies as one chain parameter is swept.

    Returns an array of shape (len(grid), N); row k holds the ascending
    eigenvalues of M with ``parameter`` set to ``grid[k]``.
    """
    grid = np.asarray(grid, dtype=float)
    energies = np.empty((grid.size, spec.n_qubits))
    for k, value in enumerate(grid):
        varied = spec.replace_parameter(parameter, float(value))
        energies[k] = spectrum_for(varied).energies
    return energies
