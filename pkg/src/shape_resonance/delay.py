"""Reflection phase and Wigner time delay tau(E) = hbar d(theta)/dE."""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field

import numpy as np

from .models import ModelSpec, reflection_at_energy

__all__ = [
    "PhasePoint",
    "Peak",
    "TimeDelayProfile",
    "delay_from_amplitude",
    "wigner_delay",
    "delay_profile",
    "find_peaks",
    "breit_wigner_delay",
    "breit_wigner_amplitude",
    "breit_wigner_pole_amplitude",
]

REL_STEP = 1e-6
MIN_POINTS = 16


@dataclass(frozen=True)
class PhasePoint:
    E: float
    r: complex
    R: float
    theta: float
    tau: float


@dataclass(frozen=True)
class Peak:
    """Interior maximum of tau refined by a parabola through three nodes."""

    epsilon: float
    height: float
    index: int


@dataclass
class TimeDelayProfile:
    model: ModelSpec | None
    grid: np.ndarray
    r: np.ndarray
    theta: np.ndarray
    tau: np.ndarray
    peaks: list[Peak] = field(default_factory=list)

    @property
    def R(self) -> np.ndarray:
        return np.abs(self.r)

    @property
    def points(self) -> list[PhasePoint]:
        return [
            PhasePoint(float(E), complex(r), float(abs(r)), float(th), float(t))
            for E, r, th, t in zip(self.grid, self.r, self.theta, self.tau)
        ]

    @property
    def peak_positions(self) -> list[float]:
        return [p.epsilon for p in self.peaks]


def delay_from_amplitude(amplitude, E: float, rel_step: float = REL_STEP) -> float:
    """Im[(dr/dE)/r] with a central difference of step rel_step*E.

    Equal to d(arg r)/dE without any phase unwrapping.
    """
    E = float(E)
    h = rel_step * E
    r0 = amplitude(E)
    dr = (amplitude(E + h) - amplitude(E - h)) / (2.0 * h)
    return (dr / r0).imag


def wigner_delay(spec: ModelSpec, E: float) -> float:
    """Wigner reflection time delay at real energy E > 0 (hbar = 1)."""
    if not E > 0:
        raise ValueError("E must be positive")
    return delay_from_amplitude(lambda e: reflection_at_energy(spec, e), E)


def find_peaks(grid: np.ndarray, tau: np.ndarray) -> list[Peak]:
    """Interior three-point local maxima of tau, parabola-refined."""
    peaks = []
    for i in range(1, len(grid) - 1):
        if tau[i] > tau[i - 1] and tau[i] >= tau[i + 1]:
            x0, x1, x2 = grid[i - 1], grid[i], grid[i + 1]
            y0, y1, y2 = tau[i - 1], tau[i], tau[i + 1]
            denom = (x0 - x1) * (x0 - x2) * (x1 - x2)
            a = (x2 * (y1 - y0) + x1 * (y0 - y2) + x0 * (y2 - y1)) / denom
            b = (x2 * x2 * (y0 - y1) + x1 * x1 * (y2 - y0) + x0 * x0 * (y1 - y2)) / denom
            if a < 0:
                xv = -b / (2.0 * a)
                xv = min(max(xv, x0), x2)
                yv = y1 + (xv - x1) * (b + a * (xv + x1))
            else:
                xv, yv = x1, y1
            peaks.append(Peak(float(xv), float(yv), i))
    return peaks


def delay_profile(spec: ModelSpec, e_min: float, e_max: float, n_points: int) -> TimeDelayProfile:
    """r, unwrapped theta and tau on a uniform grid, with refined peaks."""
    if not 0 < e_min < e_max:
        raise ValueError("need 0 < e_min < e_max")
    if n_points < MIN_POINTS:
        raise ValueError(f"need at least {MIN_POINTS} grid points")
    grid = np.linspace(e_min, e_max, n_points)
    amp = lambda e: reflection_at_energy(spec, e)  # noqa: E731
    r = np.empty(n_points, dtype=complex)
    tau = np.empty(n_points)
    for i, E in enumerate(grid):
        h = REL_STEP * E
        r0 = amp(E)
        r[i] = r0
        tau[i] = ((amp(E + h) - amp(E - h)) / (2.0 * h) / r0).imag
    theta = np.unwrap(np.angle(r))
    return TimeDelayProfile(spec, grid, r, theta, tau, find_peaks(grid, tau))


def breit_wigner_delay(E, E0: float, gamma0: float):
    """(Gamma/2) / ((E - E0)^2 + Gamma^2/4): peak 2/Gamma at E0."""
    if not gamma0 > 0:
        raise ValueError("gamma0 must be positive")
    E = np.asarray(E, dtype=float)
    half = 0.5 * gamma0
    out = half / ((E - E0) ** 2 + half * half)
    return float(out) if out.ndim == 0 else out


def breit_wigner_amplitude(E, E0: float, gamma0: float) -> complex:
    """Unimodular amplitude whose phase is arctan-shaped with width gamma0.

    ``(E - E0 - i Gamma/2) / sqrt((E - E0)^2 + Gamma^2/4)``; its delay is
    exactly :func:`breit_wigner_delay`. Analytic near the real axis, so the
    finite-difference delay applies.
    """
    half = 0.5 * gamma0
    x = complex(E) - E0
    return (x - 1j * half) / cmath.sqrt(x * x + half * half)


def breit_wigner_pole_amplitude(E, E0: float, gamma0: float) -> complex:
    """Pole/zero pair ``(E - E0 - i Gamma/2) / (E - E0 + i Gamma/2)``.

    Its phase winds twice as fast as :func:`breit_wigner_amplitude`, so its
    delay is ``2 * breit_wigner_delay`` (peak 4/Gamma).
    """
    half = 0.5 * gamma0
    x = complex(E) - E0
    return (x - 1j * half) / (x + 1j * half)
