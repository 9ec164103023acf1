"""Peak analytics: transcendental peak locations and peak detection on curves.

A single thermal channel of energy E imprints temperature most strongly at
the root of T = (|E|/2) tanh(|E|/(2T)); the root is |E| times a universal
constant (about 1/2.4).  Curves sampled on a log-spaced grid are scanned for
local maxima, shallow dips are merged, and surviving maxima are kept when
they rise above both adjacent minima by at least a fixed fraction of the
global maximum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .fermion import TransitionSpectrum

DEFAULT_PROMINENCE_FRACTION = 0.01


@lru_cache(maxsize=1)
def universal_peak_ratio() -> float:
    """Root t* of t = tanh(1/(2t))/2 by fixed-point iteration from t0 = 0.4."""
    t = 0.4
    for _ in range(200):
        t_next = 0.5 * math.tanh(0.5 / t)
        if abs(t_next - t) <= 1e-12 * t_next:
            return t_next
        t = t_next
    raise RuntimeError("peak-ratio fixed point did not converge")  # pragma: no cover


def solve_peak_equation(energy: float) -> float:
    """Temperature T* with T* = (|E|/2) tanh(|E|/(2 T*)).

    Scale covariance makes T*(E) = |E| t* with the universal ratio t*.
    """
    if energy == 0.0:
        raise ValueError("peak equation has no positive root for E = 0")
    return abs(energy) * universal_peak_ratio()


def predict_peaks(spectrum: TransitionSpectrum) -> list[tuple[float, float]]:
    """(E_l, predicted peak temperature) per transition channel.

    Degenerate channels yield duplicate predictions; a zero channel predicts
    T = 0 (it cannot produce a finite-temperature peak).
    """
    ratio = universal_peak_ratio()
    return [(float(e), abs(float(e)) * ratio) for e in spectrum.energies]


@dataclass(frozen=True)
class Peak:
    """A detected local maximum on a sampled curve."""

    temperature: float
    height: float
    prominence: float


def _local_maxima(values: np.ndarray) -> list[int]:
    return [
        i
        for i in range(1, values.size - 1)
        if values[i] > values[i - 1] and values[i] > values[i + 1]
    ]


def _refine(log_t: np.ndarray, values: np.ndarray, i: int) -> tuple[float, float]:
    """Parabolic vertex through the three samples around index i (log-T axis)."""
    x0, x1, x2 = log_t[i - 1], log_t[i], log_t[i + 1]
    y0, y1, y2 = values[i - 1], values[i], values[i + 1]
    d1, d2 = x1 - x0, x1 - x2
    num = d1 * d1 * (y1 - y2) - d2 * d2 * (y1 - y0)
    den = d1 * (y1 - y2) - d2 * (y1 - y0)
    if den == 0.0:
        return math.exp(x1), y1
    x_star = x1 - 0.5 * num / den
    # parabola value at the vertex via Lagrange form
    y_star = (
        y0 * (x_star - x1) * (x_star - x2) / ((x0 - x1) * (x0 - x2))
        + y1 * (x_star - x0) * (x_star - x2) / ((x1 - x0) * (x1 - x2))
        + y2 * (x_star - x0) * (x_star - x1) / ((x2 - x0) * (x2 - x1))
    )
    return math.exp(x_star), y_star


def detect_peaks(
    temperatures: np.ndarray,
    values: np.ndarray,
    prominence_fraction: float = DEFAULT_PROMINENCE_FRACTION,
) -> list[Peak]:
    """Interior local maxima that clear the relative-prominence rule.

    A maximum counts as a peak when its height exceeds both adjacent local
    minima by at least ``prominence_fraction`` of the curve's global maximum.
    Maxima separated by a shallower dip are merged (the lower one is
    dropped) before the rule is applied, so near-degenerate channels report
    a single peak.  Endpoints never count.  Peak positions are refined by a
    parabolic fit on the log-temperature axis, which is invariant under any
    positive rescaling of the heights.
    """
    temperatures = np.asarray(temperatures, dtype=float)
    values = np.asarray(values, dtype=float)
    if temperatures.size < 3:
        raise ValueError("need at least 3 samples to detect peaks")
    if temperatures.shape != values.shape:
        raise ValueError("temperature and value arrays must have the same shape")
    if np.any(np.diff(temperatures) <= 0.0):
        raise ValueError("temperature grid must be strictly increasing")

    threshold = prominence_fraction * float(values.max())
    maxima = _local_maxima(values)

    def dip(i: int, j: int) -> float:
        return float(values[i + 1 : j].min())

    while len(maxima) >= 2:
        separations = [
            min(values[maxima[k]], values[maxima[k + 1]]) - dip(maxima[k], maxima[k + 1])
            for k in range(len(maxima) - 1)
        ]
        k = int(np.argmin(separations))
        if separations[k] >= threshold:
            break
        drop = k if values[maxima[k]] <= values[maxima[k + 1]] else k + 1
        del maxima[drop]

    log_t = np.log(temperatures)
    peaks: list[Peak] = []
    for pos, i in enumerate(maxima):
        left_edge = maxima[pos - 1] if pos > 0 else 0
        right_edge = maxima[pos + 1] if pos + 1 < len(maxima) else values.size - 1
        left_min = float(values[left_edge:i].min())
        right_min = float(values[i + 1 : right_edge + 1].min())
        prominence = min(values[i] - left_min, values[i] - right_min)
        if prominence < threshold:
            continue
        temperature, height = _refine(log_t, values, i)
        peaks.append(Peak(temperature=temperature, height=height, prominence=float(prominence)))
    return peaks
