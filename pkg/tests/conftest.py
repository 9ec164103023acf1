"""Shared oracles and ensembles for the test suite.

The oracles here are deliberately independent of the library's computation
paths: dense matrix exponentials for thermal states, explicit tensor
reshuffles for partial traces, Richardson finite differences (escalated to
high-precision arithmetic where double-precision differencing cannot resolve
the derivative), and brute-force reconstruction of operators term by term.
"""

from __future__ import annotations

import mpmath
import numpy as np
import pytest
from scipy.linalg import expm

from chainthermo import ChainSpec, build_hamiltonian, probe_population


def random_chain(rng: np.random.Generator, n_qubits: int | None = None) -> ChainSpec:
    """A random chain with positive frequencies and signed couplings."""
    n = int(n_qubits if n_qubits is not None else rng.integers(2, 6))
    return ChainSpec(
        n,
        tuple(rng.uniform(0.05, 2.0, n)),
        tuple(rng.uniform(-0.5, 0.5, n - 1)),
        tuple(rng.uniform(-0.5, 0.5, n - 1)),
    )


def random_two_qubit(rng: np.random.Generator) -> ChainSpec:
    return random_chain(rng, 2)


def gibbs_matrix_expm(spec: ChainSpec, temperature: float) -> np.ndarray:
    """Thermal state via scipy's matrix exponential (independent of eigh)."""
    h = build_hamiltonian(spec)
    rho = expm(-h / temperature)
    return rho / np.trace(rho).real


def reduce_to_probe(rho: np.ndarray, n_qubits: int) -> np.ndarray:
    dim_anc = 2 ** (n_qubits - 1)
    return np.einsum("aiaj->ij", rho.reshape(dim_anc, 2, dim_anc, 2))


def richardson_dp(spec: ChainSpec, temperature: float) -> float:
    """Central finite difference of p(T), one Richardson extrapolation level."""
    h = 1e-5 * temperature
    wide = (probe_population(spec, temperature + h) - probe_population(spec, temperature - h)) / (
        2.0 * h
    )
    narrow = (
        probe_population(spec, temperature + h / 2) - probe_population(spec, temperature - h / 2)
    ) / h
    return (4.0 * narrow - wide) / 3.0


def richardson_dp_mpmath(spec: ChainSpec, temperature: float, dps: int = 40) -> float:
    """Richardson finite difference evaluated in high-precision arithmetic.

    Double-precision differencing bottoms out at ~eps * p / h; wherever the
    true derivative sits below that floor this oracle still resolves it.  The
    spectral data is the library's; only the differencing is re-done in
    extended precision, which is exactly what the derivative identity under
    test is about.
    """
    from chainthermo.gibbs import _chain_eigensystem

    energies, up, _ = _chain_eigensystem(spec)
    with mpmath.workdps(dps):
        e_list = [mpmath.mpf(float(e)) for e in energies]
        u_list = [mpmath.mpf(float(u)) for u in up]
        e_min = min(e_list)

        def p_of(t: mpmath.mpf) -> mpmath.mpf:
            weights = [mpmath.e ** (-(e - e_min) / t) for e in e_list]
            return sum(w * u for w, u in zip(weights, u_list)) / sum(weights)

        t = mpmath.mpf(repr(temperature))
        h = t * mpmath.mpf("1e-5")
        wide = (p_of(t + h) - p_of(t - h)) / (2 * h)
        narrow = (p_of(t + h / 2) - p_of(t - h / 2)) / h
        return float((4 * narrow - wide) / 3)


@pytest.fixture(scope="session")
def rng() -> np.random.Generator:
    return np.random.default_rng(20250810)
