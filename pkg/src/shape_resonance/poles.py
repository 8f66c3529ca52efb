"""Gamow resonances: complex zeros of the amplitude denominator D(k).

Seeds come from the peaks of the time delay: a peak at epsilon gives the
energy seed ``epsilon - i*seed_gamma`` and the momentum seed is its
principal square root, which lies in the lower half plane. Each seed is
polished by Newton's method with a central-difference derivative.

For the two-piece model D(k) carries an exponential trend: K_{ikd} decays
like exp(-pi k d / 2) along the real axis while 1/Gamma(1 + ikc) grows like
exp(pi k c / 2). Newton is run on D(k) exp(pi k (d - c) / 2), which has the
same zeros (the factor is entire and zero-free) but symmetric basins of
attraction; without it, seeds above a pole drift to the next one up.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .delay import TimeDelayProfile, delay_profile
from .errors import (
    ConvergenceError,
    SearchEscapeError,
    ShapeResonanceError,
    WrongHalfPlaneError,
)
from .models import ModelKind, ModelSpec, momentum, pole_denominator

__all__ = [
    "Resonance",
    "SearchConfig",
    "SeedFailure",
    "PoleSearch",
    "refine_pole",
    "search_poles",
    "find_poles",
    "false_pole_momenta",
]

FD_REL_STEP = 1e-7
DEDUP_DISTANCE = 1e-6
ESCAPE_FACTOR = 3.0


@dataclass(frozen=True)
class Resonance:
    """One Gamow pole; energy = k_pole**2 = E_n - i*Gamma_n/2."""

    n: int
    k_pole: complex
    epsilon: float | None = None
    iterations: int = 0

    def __post_init__(self):
        if not self.k_pole.imag < 0:
            raise ValueError("a resonance needs Im k < 0")

    @property
    def energy(self) -> complex:
        return self.k_pole * self.k_pole

    @property
    def E_n(self) -> float:
        return self.energy.real

    @property
    def half_width(self) -> float:
        return -self.energy.imag

    @property
    def gamma(self) -> float:
        return 2.0 * self.half_width

    @property
    def lifetime(self) -> float:
        return 1.0 / self.gamma


@dataclass(frozen=True)
class SearchConfig:
    e_min: float = 1.0
    e_max: float = 30.0
    seed_gamma: float = 1.0
    tol: float = 1e-12
    max_iter: int = 100
    max_poles: int | None = None
    n_points: int = 2000

    def __post_init__(self):
        if not 0 < self.e_min < self.e_max:
            raise ValueError("need 0 < e_min < e_max")
        if not self.tol > 0:
            raise ValueError("tol must be positive")


@dataclass(frozen=True)
class SeedFailure:
    seed: complex
    error: ShapeResonanceError


@dataclass
class PoleSearch:
    poles: list[Resonance]
    failures: list[SeedFailure] = field(default_factory=list)
    profile: TimeDelayProfile | None = None

    @property
    def n_seeds(self) -> int:
        return len(self.poles) + len(self.failures)

    @property
    def all_seeds_failed(self) -> bool:
        """True when seeds existed and every one hit a numerical failure.

        Escapes and upper-half-plane zeros are outcomes, not failures.
        """
        hard = [
            f for f in self.failures
            if not isinstance(f.error, (SearchEscapeError, WrongHalfPlaneError))
        ]
        return bool(self.failures) and not self.poles and len(hard) == len(self.failures)


def _trend_rate(spec: ModelSpec) -> float:
    if spec.kind is ModelKind.EXP_TWO_PIECE:
        return 0.5 * math.pi * (spec.d - spec.c)
    return 0.0


def _newton_function(spec: ModelSpec):
    rate = _trend_rate(spec)
    if rate == 0.0:
        return lambda k: pole_denominator(spec, k)
    return lambda k: pole_denominator(spec, k) * cmath.exp(rate * k)


def _derivative(f, k):
    h = FD_REL_STEP * max(abs(k), 1.0)
    return (f(k + h) - f(k - h)) / (2.0 * h)


def _newton(spec: ModelSpec, k: complex, cfg: SearchConfig) -> tuple[complex, int]:
    k_max = ESCAPE_FACTOR * math.sqrt(cfg.e_max)
    f = _newton_function(spec)
    for it in range(1, cfg.max_iter + 1):
        D = f(k)
        if D == 0:
            return k, it
        dD = _derivative(f, k)
        if dD == 0 or not math.isfinite(abs(dD)):
            raise ConvergenceError(f"vanishing derivative at k={k!r}")
        step = D / dD
        k = k - step
        if not math.isfinite(abs(k)):
            raise ConvergenceError("Newton iterate diverged")
        if abs(k) > k_max:
            raise SearchEscapeError(f"iterate k={k!r} left |k| <= {k_max:.3g}")
        if abs(step) < 1e-12 * abs(k):
            return k, it
        if abs(pole_denominator(spec, k)) <= cfg.tol * abs(pole_denominator(spec, k + 0.1)):
            return k, it
    raise ConvergenceError(f"no convergence in {cfg.max_iter} Newton steps")


def refine_pole(spec: ModelSpec, k_seed, cfg: SearchConfig | None = None,
                epsilon: float | None = None) -> Resonance:
    """Newton-polish ``k_seed`` to a zero of D(k) (trend-scaled, see module doc).

    Raises
    ------
    ConvergenceError
        After ``cfg.max_iter`` iterations without convergence.
    SearchEscapeError
        If an iterate leaves ``|k| <= 3 sqrt(e_max)``.
    WrongHalfPlaneError
        If the zero found has Im k >= 0 (false pole or bound-state
        candidate); the zero is attached to the exception.
    """
    cfg = cfg or SearchConfig()
    try:
        k, iterations = _newton(spec, complex(k_seed), cfg)
    except ShapeResonanceError:
        raise
    except (ArithmeticError, ValueError) as exc:
        raise ConvergenceError(f"Newton failed from seed {k_seed!r}: {exc}") from exc
    if k.imag >= 0:
        raise WrongHalfPlaneError(f"converged to k={k!r} with Im k >= 0", k)
    return Resonance(0, k, epsilon, iterations)


def search_poles(spec: ModelSpec, cfg: SearchConfig | None = None) -> PoleSearch:
    """Seed from time-delay peaks, refine, deduplicate, sort by E_n.

    Refinement errors are collected per seed rather than raised.
    """
    cfg = cfg or SearchConfig()
    profile = delay_profile(spec, cfg.e_min, cfg.e_max, cfg.n_points)
    found: list[Resonance] = []
    failures: list[SeedFailure] = []
    for peak in profile.peaks:
        seed = momentum(complex(peak.epsilon, -cfg.seed_gamma))
        try:
            res = refine_pole(spec, seed, cfg, epsilon=peak.epsilon)
        except ShapeResonanceError as exc:
            failures.append(SeedFailure(seed, exc))
            continue
        if res.E_n <= 0:
            continue
        if any(abs(res.k_pole - other.k_pole) < DEDUP_DISTANCE for other in found):
            continue
        found.append(res)
    found.sort(key=lambda r: r.E_n)
    if cfg.max_poles is not None:
        found = found[: cfg.max_poles]
    poles = [Resonance(n, r.k_pole, r.epsilon, r.iterations) for n, r in enumerate(found)]
    return PoleSearch(poles, failures, profile)


def find_poles(spec: ModelSpec, cfg: SearchConfig | None = None) -> list[Resonance]:
    """Resonances of ``spec`` seeded from the delay peaks in the window."""
    return search_poles(spec, cfg).poles


def false_pole_momenta(c: float, count: int) -> list[complex]:
    """k = i(n+1)/c, where 1 + ikc hits the poles of Gamma (n = 0..count-1)."""
    return [1j * (n + 1) / c for n in range(count)]
