"""Ancilla-chain qubit thermometry toolkit.

Builds XX + DM coupled qubit chains, thermalizes them, reduces to the probe
qubit, and analyzes temperature sensitivity through Fisher information and
the chain's transition spectrum.
"""

from .chain import (
    ChainSpec,
    TwoQubitClosedForm,
    build_hamiltonian,
    closed_form_for,
    pauli_at,
    total_sz,
    two_qubit_closed_form,
)
from .fermion import (
    TransitionSpectrum,
    build_m_matrix,
    fermionic_probe_population,
    fermionic_probe_population_derivative,
    log_partition_function,
    spectrum_for,
    transition_spectrum,
    transitions_vs_parameter,
)
from .gibbs import (
    GibbsState,
    ProbeState,
    SpectralDecomposition,
    TwoQubitThermalState,
    eigendecompose,
    gibbs_density_matrix,
    gibbs_weights,
    partial_trace_to_probe,
    probe_density_matrix,
    probe_population,
    probe_population_curve,
    probe_population_derivative,
    probe_state,
    two_qubit_population,
    two_qubit_population_derivative,
    two_qubit_thermal_state,
)
from .metrology import (
    BoundaryPopulationError,
    FisherPoint,
    cfi_from_population,
    fisher_curve,
    fisher_point,
    observable_fisher,
    population_approximations,
    qfi_approx,
    qfi_exact_two_qubit,
    qfi_from_population,
)
from .peaks import (
    Peak,
    detect_peaks,
    predict_peaks,
    solve_peak_equation,
    universal_peak_ratio,
)

__version__ = "0.1.0"

__all__ = [
    "BoundaryPopulationError",
    "ChainSpec",
    "FisherPoint",
    "GibbsState",
    "Peak",
    "ProbeState",
    "SpectralDecomposition",
    "TransitionSpectrum",
    "TwoQubitClosedForm",
    "TwoQubitThermalState",
    "build_hamiltonian",
    "build_m_matrix",
    "cfi_from_population",
    "closed_form_for",
    "detect_peaks",
    "eigendecompose",
    "fermionic_probe_population",
    "fermionic_probe_population_derivative",
    "fisher_curve",
    "fisher_point",
    "gibbs_density_matrix",
    "gibbs_weights",
    "log_partition_function",
    "observable_fisher",
    "partial_trace_to_probe",
    "pauli_at",
    "population_approximations",
    "predict_peaks",
    "probe_density_matrix",
    "probe_population",
    "probe_population_curve",
    "probe_population_derivative",
    "probe_state",
    "qfi_approx",
    "qfi_exact_two_qubit",
    "qfi_from_population",
    "solve_peak_equation",
    "spectrum_for",
    "total_sz",
    "transition_spectrum",
    "transitions_vs_parameter",
    "two_qubit_closed_form",
    "two_qubit_population",
    "two_qubit_population_derivative",
    "two_qubit_thermal_state",
    "universal_peak_ratio",
]
