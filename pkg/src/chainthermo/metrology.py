"""Fisher-information quantities for temperature estimation with the probe.

The probe's thermal state is diagonal, so the quantum Fisher information for
T reduces to the scalar form

    F_Q(T) = (dp/dT)^2 / (p (1 - p)),

which also equals the classical Fisher information of the population
measurement and the moment-based Fisher information of a sz measurement; a
sx measurement carries no temperature information.  The two-qubit chain
additionally admits closed hyperbolic forms (exact and low/high-temperature
approximations), kept here as independent cross-checks of the population
route.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy.special import expit

from .chain import ChainSpec, TwoQubitClosedForm
from .gibbs import _chain_eigensystem, boltzmann_weights, thermal_covariance


class BoundaryPopulationError(ValueError):
    """Population hit 0 or 1 (or an observable variance vanished).

    The Fisher formulas divide by p(1-p) or Var(X); callers should clamp or
    mask their temperature grid instead of consuming an infinity.
    """


def qfi_from_population(p: float, dp: float) -> float:
    """QFI of a diagonal qubit state from its population and dp/dT."""
    if not 0.0 < p < 1.0:
        raise BoundaryPopulationError(f"population {p} is outside (0, 1)")
    return dp * dp / (p * (1.0 - p))


def cfi_from_population(p: float, dp: float) -> float:
    """Classical Fisher information of the two-outcome population measurement.

    Summed outcome by outcome; algebraically identical to the QFI for a
    diagonal qubit state, and kept as a separate route on purpose.
    """
    if not 0.0 < p < 1.0:
        raise BoundaryPopulationError(f"population {p} is outside (0, 1)")
    return dp * dp / p + dp * dp / (1.0 - p)


def qfi_exact_two_qubit(cf: TwoQubitClosedForm, temperature: float) -> float:
    """Closed-form exact QFI of the thermal pair.

    Evaluates the hyperbolic expression

        F_Q = (B + zeta - eta cos(2 theta) + omega_s)^2
              / (T^4 chi^2 [chi^2 - (sinh(omega_s/T) - cos(2 theta) sinh(eta/T))^2])

    with every hyperbolic scaled by exp(-max(eta, omega_s)/T) so that the
    ratio survives temperatures far below the level splittings.  The
    denominator bracket is expanded into its two positive factors (the
    scaled up/down occupation sums) to avoid cancellation, and the final
    quotient is ordered so the result degrades to 0.0 only when the QFI
    itself underflows.

    The hyperbolic form is algebraically identical to dp^2 / (p (1 - p))
    for the pair's excited population: B + zeta + omega_s - eta cos(2 theta)
    equals 2 T^2 chi^2 dp/dT (the bare trailing term comes from
    cosh^2 - sinh^2 = 1), and the bracket equals 4 chi^2 p (1 - p).  Both
    routes are kept and cross-checked in the tests.
    """
    if not temperature > 0.0:
        raise ValueError(f"temperature must be positive, got {temperature}")
    a = cf.eta / temperature
    b = cf.omega_s / temperature
    u = cf.cos_2theta
    m = max(a, b)
    ea, eia = math.exp(a - m), math.exp(-a - m)
    eb, eib = math.exp(b - m), math.exp(-b - m)
    sa, ca = 0.5 * (ea - eia), 0.5 * (ea + eia)
    sb, cb = 0.5 * (eb - eib), 0.5 * (eb + eib)
    f2 = math.exp(-2.0 * m) if m < 350.0 else 0.0
    b_term = sa * sb * (cf.omega_s * u - cf.eta)
    zeta_term = ca * cb * (cf.omega_s - cf.eta * u)
    numerator = b_term + zeta_term + (cf.omega_s - cf.eta * u) * f2
    chi = ca + cb
    cos_sq, sin_sq = cf.cos_sq_theta, cf.sin_sq_theta
    factor_up = ea * cos_sq + eia * sin_sq + eib  # 2 chi p, scaled
    factor_down = ea * sin_sq + eia * cos_sq + eb  # 2 chi (1 - p), scaled
    bracket = factor_up * factor_down
    if bracket == 0.0:
        return 0.0
    return (numerator / bracket) * (numerator / (temperature**4 * chi**2))


class TwoQubitQfiAuxiliaries(NamedTuple):
    """The hyperbolic auxiliaries of the closed-form two-qubit QFI."""

    b_term: float
    zeta_term: float
    alpha_term: float


def two_qubit_qfi_auxiliaries(
    cf: TwoQubitClosedForm, temperature: float
) -> TwoQubitQfiAuxiliaries:
    """Direct (unscaled) auxiliaries; finite for moderate eta/T, omega_s/T.

    Complements the scaled evaluation in :func:`qfi_exact_two_qubit` for
    inspection and testing.
    """
    if not temperature > 0.0:
        raise ValueError(f"temperature must be positive, got {temperature}")
    a = cf.eta / temperature
    b = cf.omega_s / temperature
    u = cf.cos_2theta
    b_term = math.sinh(a) * math.sinh(b) * (cf.omega_s * u - cf.eta)
    zeta_term = math.cosh(a) * math.cosh(b) * (cf.omega_s - cf.eta * u)
    chi = math.cosh(a) + math.cosh(b)
    alpha = (math.sinh(b) - u * math.sinh(a)) ** 2 / chi**2
    return TwoQubitQfiAuxiliaries(b_term=b_term, zeta_term=zeta_term, alpha_term=alpha)


def _sech(x: float) -> float:
    ax = abs(x)
    e = math.exp(-ax)
    return 2.0 * e / (1.0 + e * e)


def population_approximations(
    cf: TwoQubitClosedForm, temperature: float
) -> tuple[float, float, float, float]:
    """Low- and high-temperature channel approximations (p-, p-', p+, p+').

    The low channel sees omega_minus with weight cos^2(theta); the high
    channel is a bare thermal qubit at omega_plus.
    """
    if not temperature > 0.0:
        raise ValueError(f"temperature must be positive, got {temperature}")
    w_minus, w_plus = cf.omega_minus, cf.omega_plus
    cos_sq = cf.cos_sq_theta
    p_low = cos_sq * float(expit(-w_minus / temperature))
    dp_low = w_minus * cos_sq * _sech(0.5 * w_minus / temperature) ** 2 / (4.0 * temperature**2)
    p_high = float(expit(-w_plus / temperature))
    dp_high = w_plus * _sech(0.5 * w_plus / temperature) ** 2 / (4.0 * temperature**2)
    return p_low, dp_low, p_high, dp_high


def qfi_approx(cf: TwoQubitClosedForm, temperature: float) -> tuple[float, float, float]:
    """(low, high, total) approximate QFI; total is simply their sum."""
    if not temperature > 0.0:
        raise ValueError(f"temperature must be positive, got {temperature}")
    t4 = temperature**4
    w_minus, w_plus = cf.omega_minus, cf.omega_plus
    cos_sq, sin_sq = cf.cos_sq_theta, cf.sin_sq_theta
    x = w_minus / temperature
    if x >= 0.0:
        e = math.exp(-x)
        low = w_minus**2 * cos_sq * e / (t4 * (1.0 + e) ** 2 * (1.0 + sin_sq * e))
    else:
        e = math.exp(x)
        low = w_minus**2 * cos_sq * e * e / (t4 * (1.0 + e) ** 2 * (sin_sq + e))
    high = w_plus**2 * _sech(0.5 * w_plus / temperature) ** 2 / (4.0 * t4)
    return low, high, low + high


_OBSERVABLES = ("sigma_z", "sigma_x")


def observable_fisher(spec: ChainSpec, temperature: float, observable: str) -> float:
    """Moment-based Fisher information F(<X>) = (d<X>/dT)^2 / Var(X) on the probe."""
    if observable not in _OBSERVABLES:
        raise ValueError(f"observable must be one of {_OBSERVABLES}, got {observable!r}")
    energies, up, cross = _chain_eigensystem(spec)
    weights, _ = boltzmann_weights(energies, temperature)
    if observable == "sigma_z":
        values = 2.0 * up - 1.0
        # Var(sz) = (1 + <sz>)(1 - <sz>): accumulate the two complementary
        # occupation sums separately so the variance keeps full precision
        # when the population saturates near 0 or 1.
        variance = 4.0 * float(weights @ up) * float(weights @ (1.0 - up))
    else:
        values = 2.0 * cross.real
        mean = float(weights @ values)
        variance = 1.0 - mean * mean  # Pauli observables square to the identity
    derivative = thermal_covariance(energies, weights, values) / temperature**2
    if variance <= 0.0:
        raise BoundaryPopulationError(f"Var({observable}) vanished at T={temperature}")
    return derivative * derivative / variance


@dataclass(frozen=True)
class FisherPoint:
    """Every thermometric quantity evaluated at one temperature."""

    temperature: float
    qfi: float
    cfi: float
    fi_sigma_z: float
    fi_sigma_x: float
    population: float
    population_derivative: float


def fisher_point(spec: ChainSpec, temperature: float) -> FisherPoint:
    """Evaluate all Fisher quantities at one temperature.

    Where the population has underflowed to exactly 0 or 1, the Fisher
    values are reported as 0.0 (vanishing sensitivity) instead of raising.
    """
    curve = fisher_curve(spec, np.array([temperature]))
    return FisherPoint(
        temperature=temperature,
        qfi=float(curve["qfi"][0]),
        cfi=float(curve["cfi"][0]),
        fi_sigma_z=float(curve["fi_sigma_z"][0]),
        fi_sigma_x=float(curve["fi_sigma_x"][0]),
        population=float(curve["population"][0]),
        population_derivative=float(curve["dpopulation"][0]),
    )


def fisher_curve(spec: ChainSpec, temperatures: np.ndarray) -> dict[str, np.ndarray]:
    """Vectorized evaluation of all probe quantities over a temperature grid.

    Grid points where p(1-p) or Var underflows to zero report 0.0 for the
    corresponding Fisher entries.
    """
    temperatures = np.asarray(temperatures, dtype=float)
    if np.any(temperatures <= 0.0):
        raise ValueError("temperatures must be positive")
    energies, up, cross = _chain_eigensystem(spec)
    shifted = -(energies[None, :] - energies.min()) / temperatures[:, None]
    lam = np.exp(shifted)
    lam /= lam.sum(axis=1, keepdims=True)
    t_sq = temperatures**2

    p = lam @ up
    mean_energy = lam @ energies
    centered = lam * (energies[None, :] - mean_energy[:, None])
    # derivatives of Boltzmann averages are thermal covariances; center both
    # factors so round-off tracks the covariance, not the energy spread
    dp = np.einsum("tk,tk->t", centered, up[None, :] - p[:, None]) / t_sq

    pq = p * (1.0 - p)
    ok = pq > 0.0
    qfi = np.zeros_like(p)
    cfi = np.zeros_like(p)
    qfi[ok] = dp[ok] ** 2 / pq[ok]
    cfi[ok] = dp[ok] ** 2 / p[ok] + dp[ok] ** 2 / (1.0 - p[ok])

    z_values = 2.0 * up - 1.0
    z = lam @ z_values
    dz = np.einsum("tk,tk->t", centered, z_values[None, :] - z[:, None]) / t_sq
    var_z = 4.0 * (lam @ up) * (lam @ (1.0 - up))  # (1+<sz>)(1-<sz>) without cancellation
    fi_z = np.zeros_like(p)
    ok_z = var_z > 0.0
    fi_z[ok_z] = dz[ok_z] ** 2 / var_z[ok_z]

    x_values = 2.0 * cross.real
    x = lam @ x_values
    dx = np.einsum("tk,tk->t", centered, x_values[None, :] - x[:, None]) / t_sq
    var_x = 1.0 - x * x
    fi_x = np.zeros_like(p)
    ok_x = var_x > 0.0
    fi_x[ok_x] = dx[ok_x] ** 2 / var_x[ok_x]

    return {
        "population": p,
        "dpopulation": dp,
        "qfi": qfi,
        "cfi": cfi,
        "fi_sigma_z": fi_z,
        "fi_sigma_x": fi_x,
        "coherence": np.abs(lam @ cross),
    }
