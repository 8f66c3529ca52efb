"""Resonant (Gamow) eigenstates and their decay law.

At a pole k = alpha - i*beta the incident coefficient vanishes, so on the
exit side psi ~ e^{-ikx}, whose modulus e^{-beta x} grows without bound as
x -> -infinity while the state decays in time as e^{-Gamma t}.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import PoleMismatchError
from .models import ModelKind, ModelSpec, pole_denominator
from .poles import Resonance
from .special import bessel_i, bessel_k, complex_gamma

__all__ = [
    "GamowProfile",
    "DecayLaw",
    "gamow_solution",
    "gamow_wavefunction",
    "survival_probability",
    "plane_wave_coefficients",
    "envelope_slope",
    "outgoing_edge",
]

RESIDUAL_TOL = 1e-8


@dataclass(frozen=True)
class DecayLaw:
    gamma: float

    def __post_init__(self):
        if not self.gamma > 0:
            raise ValueError("gamma must be positive")

    @property
    def mean_lifetime(self) -> float:
        return 1.0 / self.gamma

    @classmethod
    def from_resonance(cls, pole: Resonance) -> "DecayLaw":
        return cls(pole.gamma)


def survival_probability(law: DecayLaw, t: float) -> float:
    """exp(-Gamma t); equals exactly e^-1 at t = mean_lifetime."""
    if t < 0:
        raise ValueError("t must be non-negative")
    return math.exp(-t / law.mean_lifetime)


@dataclass
class GamowProfile:
    model: ModelSpec
    pole: Resonance
    x_grid: np.ndarray
    psi: np.ndarray
    dpsi: np.ndarray

    @property
    def abs_psi(self) -> np.ndarray:
        return np.abs(self.psi)

    @property
    def alpha(self) -> float:
        return self.pole.k_pole.real

    @property
    def beta(self) -> float:
        return -self.pole.k_pole.imag


def _delta_wall(spec, k, x, side):
    a = spec.a
    if x > 0:
        return 0j, 0j
    if x < -a or (x == -a and side == "left"):
        b = -cmath.sin(k * a) * cmath.exp(-1j * k * a)
        w = b * cmath.exp(-1j * k * x)
        return w, -1j * k * w
    return cmath.sin(k * x), k * cmath.cos(k * x)


def _two_piece(spec, k, x, side):
    sc = spec.scales
    if spec.c == 0:
        def left(xx):
            w = cmath.exp(-1j * k * xx)
            return w, -1j * k * w
    else:
        nu = 1j * k * spec.c
        norm = cmath.exp(nu * math.log(0.5 * sc.s_c)) * complex_gamma(1.0 - nu)

        def left(xx):
            z = sc.s_c * math.exp(xx / spec.c)
            ev = bessel_i(-nu, z)
            return norm * ev.value, norm * ev.derivative * z / spec.c

    if x < 0 or (x == 0 and side == "left"):
        return left(x)
    psi0, _ = left(0.0)
    nu_d = 1j * k * spec.d
    C = psi0 / bessel_k(nu_d, sc.s_d).value
    z = sc.s_d * math.exp(x / spec.d)
    ev = bessel_k(nu_d, z)
    return C * ev.value, C * ev.derivative * z / spec.d


def gamow_solution(spec: ModelSpec, k, x: float, side: str = "right") -> tuple[complex, complex]:
    """Unnormalized (psi, psi') of the purely outgoing solution at momentum k.

    ``side`` picks the one-sided derivative at a junction (x = -a for the
    delta wall, x = 0 for the two-piece potential).
    """
    k = complex(k)
    if spec.kind is ModelKind.DELTA_WALL:
        return _delta_wall(spec, k, float(x), side)
    if spec.kind is ModelKind.EXP_TWO_PIECE:
        return _two_piece(spec, k, float(x), side)
    raise PoleMismatchError("the one-piece exponential has no resonances")


def _check_pole(spec, k):
    residual = abs(pole_denominator(spec, k))
    scale = abs(pole_denominator(spec, k + 0.1))
    if not residual <= RESIDUAL_TOL * scale:
        raise PoleMismatchError(
            f"k={k!r} is not a pole of this model (|D|={residual:.3g}, scale {scale:.3g})"
        )


def gamow_wavefunction(spec: ModelSpec, pole: Resonance, x_min: float, x_max: float,
                       n: int) -> GamowProfile:
    """Sample the resonant state on ``n`` uniform nodes of [x_min, x_max].

    Normalized so that psi(x_min) = 1.

    Raises
    ------
    PoleMismatchError
        If ``pole.k_pole`` is not a zero of the model's denominator.
    """
    if not x_min < x_max:
        raise ValueError("need x_min < x_max")
    if n < 2:
        raise ValueError("need at least two samples")
    if spec.kind is ModelKind.EXP_ONE_PIECE:
        raise PoleMismatchError("the one-piece exponential has no resonances")
    k = pole.k_pole
    _check_pole(spec, k)
    x = np.linspace(x_min, x_max, n)
    vals = [gamow_solution(spec, k, xi) for xi in x]
    psi = np.array([v[0] for v in vals])
    dpsi = np.array([v[1] for v in vals])
    ref = psi[0]
    return GamowProfile(spec, pole, x, psi / ref, dpsi / ref)


def plane_wave_coefficients(k, x: float, psi: complex, dpsi: complex) -> tuple[complex, complex]:
    """(A, B) with psi = A e^{ikx} + B e^{-ikx} matched in value and slope at x."""
    k = complex(k)
    A = cmath.exp(-1j * k * x) * (1j * k * psi + dpsi) / (2j * k)
    B = cmath.exp(1j * k * x) * (1j * k * psi - dpsi) / (2j * k)
    return A, B


FLAT_TOL = 1e-8


def outgoing_edge(spec: ModelSpec, energy=None, flat_tol: float = FLAT_TOL) -> float:
    """Right end of the exit region where psi is a pure outgoing wave.

    For the delta wall this is x = -a exactly. For the two-piece model it is
    x = -5c, moved further left if needed so that V < flat_tol*|energy|.
    """
    if spec.kind is ModelKind.DELTA_WALL:
        return -spec.a
    if spec.kind is ModelKind.EXP_TWO_PIECE:
        if spec.c == 0:
            return 0.0
        edge = -5.0 * spec.c
        if energy is not None:
            edge = min(edge, 0.5 * spec.c * math.log(flat_tol * abs(energy) / spec.V0))
        return edge
    raise ValueError("the one-piece exponential has no exit region")


def envelope_slope(profile: GamowProfile, x_lo: float, x_hi: float) -> float:
    """Least-squares slope of ln|psi| over x_lo <= x <= x_hi (about -beta)."""
    mask = (profile.x_grid >= x_lo) & (profile.x_grid <= x_hi)
    if mask.sum() < 2:
        raise ValueError("fewer than two samples in the fit window")
    return float(np.polyfit(profile.x_grid[mask], np.log(profile.abs_psi[mask]), 1)[0])
