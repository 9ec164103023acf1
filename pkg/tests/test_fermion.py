import math

import numpy as np
import pytest

from chainthermo import (
    ChainSpec,
    build_hamiltonian,
    build_m_matrix,
    closed_form_for,
    eigendecompose,
    fermionic_probe_population,
    fermionic_probe_population_derivative,
    log_partition_function,
    probe_state,
    spectrum_for,
    transition_spectrum,
    transitions_vs_parameter,
    two_qubit_population,
)
from chainthermo.fermion import TransitionSpectrum

from conftest import random_chain

FIG9_SPEC = ChainSpec(4, (0.004, 0.04, 0.4, 1.0), (0.0008, 0.08, 0.4), (0.006, 0.06, 0.4))
FIG10_SPEC = ChainSpec(
    5, (0.0004, 0.004, 0.04, 0.4, 1.0), (0.00095, 0.008, 0.08, 0.4), (0.0005, 0.005, 0.06, 0.2)
)


class TestMMatrix:
    def test_two_qubit_entries(self):
        m = build_m_matrix(ChainSpec.two_qubit(0.3, 1.0, 0.05, 0.02))
        expected = np.array(
            [[0.3, 2 * (0.05 + 0.02j)], [2 * (0.05 - 0.02j), 1.0]], dtype=complex
        )
        np.testing.assert_allclose(m, expected)

    def test_decoupled_chain_is_diagonal(self):
        spec = ChainSpec(4, (0.1, 0.2, 0.3, 1.0), (0.0, 0.0, 0.0), (0.0, 0.0, 0.0))
        np.testing.assert_allclose(build_m_matrix(spec), np.diag([0.1, 0.2, 0.3, 1.0]))

    def test_four_qubit_preset_structure(self):
        m = build_m_matrix(FIG9_SPEC)
        assert m.shape == (4, 4)
        np.testing.assert_allclose(np.diag(m), [0.004, 0.04, 0.4, 1.0])
        np.testing.assert_allclose(np.diag(m, 1), 2 * (np.array([0.0008, 0.08, 0.4]) + 1j * np.array([0.006, 0.06, 0.4])))
        np.testing.assert_allclose(m, m.conj().T)
        # outside the tridiagonal band everything vanishes
        assert m[0, 2] == m[0, 3] == m[1, 3] == 0.0


class TestTransitionSpectrum:
    def test_two_qubit_channels_are_omega_plus_minus(self):
        spec = ChainSpec.two_qubit(0.3, 1.0, 0.07, 0.04)
        cf = closed_form_for(spec)
        spectrum = spectrum_for(spec)
        np.testing.assert_allclose(
            spectrum.energies, [cf.omega_minus, cf.omega_plus], atol=1e-12
        )

    def test_published_off_resonant_channels(self):
        spectrum = spectrum_for(ChainSpec.two_qubit(0.04, 1.0, 0.05, 0.03))
        assert abs(spectrum.energies[0] - 0.026) <= 0.001
        assert abs(spectrum.energies[1] - 1.013) <= 0.002

    def test_weights_sum_to_one(self, rng):
        for _ in range(50):
            spectrum = spectrum_for(random_chain(rng))
            assert abs(spectrum.probe_weights.sum() - 1.0) < 1e-12

    def test_four_qubit_preset_spans_decades(self):
        spectrum = spectrum_for(FIG9_SPEC)
        magnitudes = np.sort(np.abs(spectrum.energies))
        assert magnitudes[-1] / magnitudes[0] > 1e2  # well-separated channel scales

    def test_rejects_non_hermitian(self):
        with pytest.raises(ValueError):
            transition_spectrum(np.array([[0.0, 1.0], [2.0, 0.0]]))


class TestPartitionFunction:
    def test_single_zero_channel(self):
        spectrum = TransitionSpectrum(np.array([0.0]), np.array([1.0]))
        for t in (0.1, 1.0, 10.0):
            assert math.isclose(log_partition_function(spectrum, t), math.log(2.0), rel_tol=1e-14)

    def test_high_temperature_limit(self):
        spectrum = spectrum_for(ChainSpec.two_qubit(0.3, 1.0, 0.07, 0.04))
        assert math.isclose(log_partition_function(spectrum, 1e8), 2.0 * math.log(2.0), rel_tol=1e-6)

    def test_agrees_with_spin_space_after_constant_restored(self, rng):
        # oracle: spin-space log Z from the 2^N spectrum; the fermionic form
        # drops the constant -sum(omega)/2, so restore it before comparing
        for _ in range(20):
            spec = random_chain(rng)
            spectrum = spectrum_for(spec)
            decomposition = eigendecompose(build_hamiltonian(spec))
            for t in (0.05, 0.5, 5.0):
                shift = decomposition.eigenvalues.min()
                log_z_spin = math.log(
                    np.sum(np.exp(-(decomposition.eigenvalues - shift) / t))
                ) - shift / t
                log_z_fermion = log_partition_function(spectrum, t)
                restored = log_z_fermion + 0.5 * sum(spec.omegas) / t
                assert abs(restored - log_z_spin) < 1e-10

    def test_no_overflow_at_low_temperature(self):
        spectrum = spectrum_for(FIG10_SPEC)
        value = log_partition_function(spectrum, 1e-6)
        assert np.isfinite(value)

    def test_rejects_nonpositive_temperature(self):
        spectrum = spectrum_for(ChainSpec.two_qubit(1.0, 1.0, 0.1, 0.1))
        with pytest.raises(ValueError):
            log_partition_function(spectrum, -0.5)


class TestFermionicPopulation:
    def test_decoupled_probe(self):
        spec = ChainSpec(3, (0.3, 0.7, 1.0), (0.0, 0.0), (0.0, 0.0))
        spectrum = spectrum_for(spec)
        for t in (0.05, 0.5, 5.0):
            assert math.isclose(
                fermionic_probe_population(spectrum, t),
                1.0 / (1.0 + math.exp(1.0 / t)),
                rel_tol=1e-12,
            )

    def test_matches_two_qubit_closed_form(self):
        spec = ChainSpec.two_qubit(0.04, 1.0, 0.04, 0.02)
        cf = closed_form_for(spec)
        spectrum = spectrum_for(spec)
        for t in np.geomspace(1e-3, 1e2, 40):
            assert abs(fermionic_probe_population(spectrum, t) - two_qubit_population(cf, t)) < 1e-12

    def test_matches_exact_diagonalization_five_qubits(self):
        spectrum = spectrum_for(FIG10_SPEC)
        for t in np.geomspace(1e-4, 10.0, 15):
            assert abs(fermionic_probe_population(spectrum, t) - probe_state(FIG10_SPEC, t).p) < 1e-10

    def test_oracle_equivalence_random_ensemble(self, rng):
        # the module's reason to exist: Fermi-weight population == exact reduction
        worst = 0.0
        for _ in range(200):
            spec = random_chain(rng)
            spectrum = spectrum_for(spec)
            for t in np.geomspace(1e-3, 1e2, 10):
                worst = max(worst, abs(fermionic_probe_population(spectrum, t) - probe_state(spec, t).p))
        assert worst < 1e-10

    def test_derivative_matches_exact_route(self, rng):
        from chainthermo import probe_population_derivative

        for _ in range(30):
            spec = random_chain(rng)
            spectrum = spectrum_for(spec)
            for t in np.geomspace(1e-3, 1e2, 8):
                exact = probe_population_derivative(spec, t)
                fermi = fermionic_probe_population_derivative(spectrum, t)
                assert abs(exact - fermi) < 1e-11 * max(1.0, abs(exact))


class TestTransitionsVsParameter:
    def test_zero_couplings_give_constant_lines(self):
        spec = ChainSpec(3, (0.1, 0.4, 1.0), (0.0, 0.0), (0.0, 0.0))
        table = transitions_vs_parameter(spec, "g1", np.array([0.0]))
        np.testing.assert_allclose(table[0], [0.1, 0.4, 1.0])

    def test_weak_coupling_sweep_keeps_four_branches(self):
        spec = ChainSpec(4, (0.004, 0.04, 0.4, 1.0), (0.007, 0.06, 0.4), (0.005, 0.04, 0.4))
        grid = np.linspace(0.0, 0.1, 21)
        table = transitions_vs_parameter(spec, "g2", grid)
        assert table.shape == (21, 4)
        # branches stay ordered and never collide
        gaps = np.diff(table, axis=1)
        assert np.all(gaps > 1e-6)

    def test_strong_coupling_leaves_two_separated_scales(self):
        spec = ChainSpec(4, (0.004, 0.04, 0.4, 1.0), (0.006, 0.04, 0.4), (0.004, 2.0, 0.4))
        energies = np.sort(np.abs(spectrum_for(spec).energies))
        # group magnitudes into decade clusters: exactly two survive at g2 = 2
        clusters = 1
        for low, high in zip(energies[:-1], energies[1:]):
            if high / max(low, 1e-300) > 10.0:
                clusters += 1
        assert clusters == 2

    def test_bad_selector_rejected(self):
        spec = ChainSpec.two_qubit(1.0, 1.0, 0.1, 0.1)
        with pytest.raises(ValueError):
            transitions_vs_parameter(spec, "g7", np.array([0.0, 0.1]))
