"""Reflection amplitude by direct integration of the Schrodinger equation.

This is the brute-force check on the closed forms. Starting deep in the
forbidden region from a WKB decaying seed, psi'' = (V - E) psi is
integrated leftward with fixed-step RK4 down to a point where the
potential is negligible, and psi there is split into e^{+ikx} and e^{-ikx}
parts. Leftward integration is stable because the wanted solution grows
in that direction.

The junction x = 0 is always a grid node, so the kink (c > 0) or the step
(c = 0) of the two-piece potential never falls inside an RK4 stage.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import IntegrationOverflowError, NotPointwiseError, RegionError
from .models import ModelKind, ModelSpec

__all__ = [
    "IntegrationConfig",
    "SolutionTrace",
    "wkb_start",
    "oracle_reflection",
    "oracle_reflection_grid",
    "integrate_inward",
]

RENORM_THRESHOLD = 1e100
RENORM_FACTOR = 1e-100


@dataclass(frozen=True)
class IntegrationConfig:
    """Discretization of the inward integration.

    ``x_left``/``x_right`` of None are chosen per model and energy from
    ``flat_tol`` (V(x_left) < flat_tol*E) and ``depth_factor``
    (V(x_right) > depth_factor*E). Both ends are snapped to the step grid.
    """

    x_left: float | None = None
    x_right: float | None = None
    step: float = 1e-3
    flat_tol: float = 1e-12
    depth_factor: float = 1e3

    def __post_init__(self):
        if not self.step > 0:
            raise ValueError("step must be positive")
        if self.x_left is not None and not self.x_left < 0:
            raise ValueError("x_left must be negative")
        if self.x_right is not None and not self.x_right > 0:
            raise ValueError("x_right must be positive")


@dataclass
class SolutionTrace:
    """Samples of (x, psi, psi') along one integration, right to left."""

    x: np.ndarray
    psi: np.ndarray
    dpsi: np.ndarray
    renormalizations: list = field(default_factory=list)


def _pieces(spec: ModelSpec):
    """(left_profile, right_profile) as (V0, length) or None for V = 0."""
    if spec.kind is ModelKind.DELTA_WALL:
        raise NotPointwiseError("the oracle needs a pointwise potential")
    if spec.kind is ModelKind.EXP_ONE_PIECE:
        return (spec.V0, spec.c), (spec.V0, spec.c)
    left = (spec.V0, spec.c) if spec.c > 0 else None
    return left, (spec.V0, spec.d)


def _v(profile, x):
    if profile is None:
        return np.zeros_like(x)
    v0, length = profile
    return v0 * np.exp(2.0 * x / length)


def _auto_bounds(spec, E_max, E_min, cfg):
    left, right = _pieces(spec)
    h = cfg.step
    if cfg.x_right is None:
        v0, length = right
        xr = 0.5 * length * math.log(cfg.depth_factor * E_max / v0)
        xr = max(xr, 0.1)
    else:
        xr = cfg.x_right
    if cfg.x_left is None:
        if left is None:
            xl = -1.0
        else:
            v0, length = left
            xl = min(0.5 * length * math.log(cfg.flat_tol * E_min / v0), -1.0)
    else:
        xl = cfg.x_left
    return math.floor(xl / h) * h, math.ceil(xr / h) * h


def wkb_start(spec: ModelSpec, E: float, x_right: float,
              depth_factor: float = 1e3) -> tuple[complex, complex]:
    """Decaying WKB seed psi = q^{-1/2}, psi' = -(q + q'/(2q)) psi.

    q = sqrt(V - E); the exp(-int q) factor is a pure scale and is dropped.

    Raises
    ------
    RegionError
        If V(x_right) <= depth_factor * E.
    """
    _, right = _pieces(spec)
    if spec.kind is ModelKind.EXP_ONE_PIECE:
        right = (spec.V0, spec.c)
    v0, length = right
    V = v0 * math.exp(2.0 * x_right / length)
    if not V > depth_factor * E:
        raise RegionError(
            f"V(x_right)={V:.6g} is not deeper than {depth_factor:g}*E={depth_factor * E:.6g}"
        )
    q = math.sqrt(V - E)
    dq = (2.0 * V / length) / (2.0 * q)
    psi = q ** -0.5
    return complex(psi), complex(-(q + dq / (2.0 * q)) * psi)


def _rk4_leftward(profile, x_start, n_steps, h, E, psi, dpsi, trace=None):
    """Integrate n_steps of size h from x_start toward -x; arrays over energies."""
    xs = x_start - 0.5 * h * np.arange(2 * n_steps + 1)
    vv = _v(profile, xs)
    for i in range(n_steps):
        v0, v1, v2 = vv[2 * i], vv[2 * i + 1], vv[2 * i + 2]
        # y' = (dpsi, (V - E) psi), stepping by -h
        k1p, k1d = dpsi, (v0 - E) * psi
        p2 = psi - 0.5 * h * k1p
        d2 = dpsi - 0.5 * h * k1d
        k2p, k2d = d2, (v1 - E) * p2
        p3 = psi - 0.5 * h * k2p
        d3 = dpsi - 0.5 * h * k2d
        k3p, k3d = d3, (v1 - E) * p3
        p4 = psi - h * k3p
        d4 = dpsi - h * k3d
        k4p, k4d = d4, (v2 - E) * p4
        psi = psi - h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p)
        dpsi = dpsi - h / 6.0 * (k1d + 2.0 * k2d + 2.0 * k3d + k4d)
        big = np.abs(psi) > RENORM_THRESHOLD
        if big.any():
            psi = np.where(big, psi * RENORM_FACTOR, psi)
            dpsi = np.where(big, dpsi * RENORM_FACTOR, dpsi)
            if trace is not None:
                trace.renormalizations.append(float(xs[2 * i + 2]))
        if trace is not None:
            trace.x.append(float(xs[2 * i + 2]))
            trace.psi.append(float(psi[0]))
            trace.dpsi.append(float(dpsi[0]))
    if not (np.all(np.isfinite(psi)) and np.all(np.isfinite(dpsi))):
        raise IntegrationOverflowError("solution overflowed during integration")
    return psi, dpsi


def _integrate(spec, energies, cfg, record=False):
    energies = np.atleast_1d(np.asarray(energies, dtype=float))
    if np.any(energies <= 0):
        raise ValueError("energies must be positive")
    left, right = _pieces(spec)
    xl, xr = _auto_bounds(spec, energies.max(), energies.min(), cfg)
    h = cfg.step

    v_left = float(_v(left, np.array([xl]))[0])
    if np.any(v_left >= cfg.flat_tol * energies):
        raise RegionError(
            f"V(x_left)={v_left:.3g} is not below {cfg.flat_tol:g}*E; move x_left further left"
        )
    seeds = [wkb_start(spec, E, xr, cfg.depth_factor) for E in energies]
    psi = np.array([s[0].real for s in seeds])
    dpsi = np.array([s[1].real for s in seeds])

    trace = None
    if record:
        trace = SolutionTrace([xr], [float(psi[0])], [float(dpsi[0])])
    n_right = int(round(xr / h))
    n_left = int(round(-xl / h))
    psi, dpsi = _rk4_leftward(right, n_right * h, n_right, h, energies, psi, dpsi, trace)
    psi, dpsi = _rk4_leftward(left, 0.0, n_left, h, energies, psi, dpsi, trace)

    x = -n_left * h
    k = np.sqrt(energies)
    A = np.exp(-1j * k * x) * (1j * k * psi + dpsi) / (2j * k)
    B = np.exp(1j * k * x) * (1j * k * psi - dpsi) / (2j * k)
    r = B / A
    if trace is not None:
        trace = SolutionTrace(
            np.array(trace.x), np.array(trace.psi), np.array(trace.dpsi),
            trace.renormalizations,
        )
    return r, trace


def oracle_reflection_grid(spec: ModelSpec, energies, cfg: IntegrationConfig | None = None) -> np.ndarray:
    """Oracle amplitudes for many energies in one vectorized sweep.

    All energies share the integration interval, chosen to satisfy the
    flat and deep conditions for the smallest and largest energy.
    """
    return _integrate(spec, energies, cfg or IntegrationConfig())[0]


def oracle_reflection(spec: ModelSpec, E: float, cfg: IntegrationConfig | None = None) -> complex:
    """Reflection amplitude r(E) from direct integration (real E > 0 only)."""
    return complex(oracle_reflection_grid(spec, [E], cfg)[0])


def integrate_inward(spec: ModelSpec, E: float, cfg: IntegrationConfig | None = None):
    """Like :func:`oracle_reflection` but also returns the SolutionTrace."""
    r, trace = _integrate(spec, [E], cfg or IntegrationConfig(), record=True)
    return complex(r[0]), trace
