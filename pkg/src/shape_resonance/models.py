"""The three exactly solvable one-dimensional potentials.

Units: 2m = 1 and hbar = 1, so k = sqrt(E) and a complex momentum k maps to
the complex energy k**2.

* ``DeltaWall``: ``V0 delta(x + a)`` in front of a rigid wall at x = 0.
* ``ExpOnePiece``: ``V0 exp(2x/c)`` on the whole line.
* ``ExpTwoPiece``: ``V0 exp(2x/c)`` for x <= 0 and ``V0 exp(2x/d)`` for
  x > 0; ``c = 0`` is the step limit (free region on the left).

Every reflection amplitude is written as ``r = N(k)/D(k)`` with ``N`` and
``D`` analytic near the physical poles; ``D`` is what the pole finder
drives to zero.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

from .errors import NotPointwiseError, PoleDivisionError
from .special import bessel_i, bessel_k, reciprocal_gamma

__all__ = [
    "ModelKind",
    "ModelSpec",
    "ScaleParams",
    "UNITS",
    "potential_value",
    "amplitude_parts",
    "reflection",
    "reflection_at_energy",
    "reflection_delta_wall",
    "reflection_exp_one_piece",
    "reflection_exp_two_piece",
    "two_piece_bracket",
    "pole_denominator",
    "momentum",
]

UNITS = {"two_m": 1.0, "hbar": 1.0}

_TINY = 1e-300


class ModelKind(str, Enum):
    DELTA_WALL = "DeltaWall"
    EXP_ONE_PIECE = "ExpOnePiece"
    EXP_TWO_PIECE = "ExpTwoPiece"


@dataclass(frozen=True)
class ScaleParams:
    """Dimensionless Bessel arguments at the junction x = 0."""

    s_c: float
    s_d: float | None
    zeta: float | None


@dataclass(frozen=True)
class ModelSpec:
    """Immutable description of one potential (natural units)."""

    kind: ModelKind
    V0: float
    a: float | None = None
    c: float | None = None
    d: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", ModelKind(self.kind))
        for name in ("V0", "a", "c", "d"):
            v = getattr(self, name)
            if v is not None:
                if not math.isfinite(v):
                    raise ValueError(f"{name} must be finite")
                object.__setattr__(self, name, float(v))
        kind = self.kind
        if kind is ModelKind.DELTA_WALL:
            # V0 = 0 is the bare wall, kept as a limiting case
            if self.V0 < 0:
                raise ValueError("DeltaWall needs V0 >= 0")
            if self.a is None or self.a <= 0:
                raise ValueError("DeltaWall needs a > 0")
            if self.c is not None or self.d is not None:
                raise ValueError("DeltaWall takes no c or d")
            return
        if self.V0 <= 0:
            raise ValueError(f"{kind.value} needs V0 > 0")
        if self.a is not None:
            raise ValueError(f"{kind.value} takes no a")
        if kind is ModelKind.EXP_ONE_PIECE:
            if self.c is None or self.c <= 0:
                raise ValueError("ExpOnePiece needs c > 0")
            if self.d is not None:
                raise ValueError("ExpOnePiece takes no d")
        else:
            if self.c is None or self.c < 0:
                raise ValueError("ExpTwoPiece needs c >= 0")
            if self.d is None or self.d <= 0:
                raise ValueError("ExpTwoPiece needs d > 0")

    @classmethod
    def delta_wall(cls, V0, a):
        return cls(ModelKind.DELTA_WALL, V0, a=a)

    @classmethod
    def exp_one_piece(cls, V0, c):
        return cls(ModelKind.EXP_ONE_PIECE, V0, c=c)

    @classmethod
    def exp_two_piece(cls, V0, c, d):
        return cls(ModelKind.EXP_TWO_PIECE, V0, c=c, d=d)

    @property
    def scales(self) -> ScaleParams:
        if self.kind is ModelKind.DELTA_WALL:
            raise NotPointwiseError("DeltaWall has no Bessel scales")
        root = math.sqrt(self.V0)
        s_c = self.c * root
        if self.kind is ModelKind.EXP_ONE_PIECE:
            return ScaleParams(s_c, None, None)
        s_d = self.d * root
        zeta = self.d / self.c if self.c > 0 else None
        return ScaleParams(s_c, s_d, zeta)

    def params(self) -> dict:
        out = {"V0": self.V0}
        for name in ("a", "c", "d"):
            v = getattr(self, name)
            if v is not None:
                out[name] = v
        return out


def momentum(E) -> complex:
    """Principal square root k = sqrt(E); Im k < 0 for fourth-quadrant E."""
    return cmath.sqrt(complex(E))


def potential_value(spec: ModelSpec, x: float) -> float:
    """V(x) for the exponential models.

    The two-piece model uses the left branch at x = 0 (both branches give V0
    there); with c = 0 (step limit) it returns 0 for x <= 0.
    """
    if spec.kind is ModelKind.DELTA_WALL:
        raise NotPointwiseError("a delta potential has no pointwise value")
    if spec.kind is ModelKind.EXP_ONE_PIECE:
        return spec.V0 * math.exp(2.0 * x / spec.c)
    if x > 0:
        return spec.V0 * math.exp(2.0 * x / spec.d)
    if spec.c == 0:
        return 0.0
    return spec.V0 * math.exp(2.0 * x / spec.c)


# ---------------------------------------------------------------------------
# numerator / denominator pairs
# ---------------------------------------------------------------------------

def _delta_wall_parts(spec, k):
    ka = k * spec.a
    s, c = cmath.sin(ka), cmath.cos(ka)
    base = spec.V0 * s + k * c
    num = -cmath.exp(-2j * ka) * (base + 1j * k * s)
    den = base - 1j * k * s
    return num, den


def _log_half_s(spec) -> float:
    return math.log(0.5 * spec.scales.s_c)


def _one_piece_parts(spec, k):
    nu = 1j * k * spec.c
    # r = -(s/2)^(-2ikc) Gamma(1+ikc)/Gamma(1-ikc), written with 1/Gamma
    num = -cmath.exp(-2.0 * nu * _log_half_s(spec)) * reciprocal_gamma(1.0 - nu)
    den = reciprocal_gamma(1.0 + nu)
    return num, den


def _right_log_data(spec, k):
    """(K, dK/dx) of the right-hand solution K_{ikd}(s_d e^{x/d}) at x = 0."""
    sc = spec.scales
    kev = bessel_k(1j * k * spec.d, sc.s_d)
    return kev.value, (sc.s_d / spec.d) * kev.derivative


def _two_piece_parts(spec, k):
    K, dK = _right_log_data(spec, k)
    if spec.c == 0:
        # free region e^{+-ikx} matched to K at x = 0
        return 1j * k * K - dK, 1j * k * K + dK
    sc = spec.scales
    nu = 1j * k * spec.c
    chain = sc.s_c / spec.c
    ip = bessel_i(nu, sc.s_c)
    im = bessel_i(-nu, sc.s_c)
    # Wronskian-type matching of each left basis function against the right solution
    w_in = ip.value * dK - chain * ip.derivative * K
    w_out = im.value * dK - chain * im.derivative * K
    log_half = _log_half_s(spec)
    num = -cmath.exp(-2.0 * nu * log_half) * reciprocal_gamma(1.0 - nu) * w_in
    den = reciprocal_gamma(1.0 + nu) * w_out
    return num, den


_PARTS = {
    ModelKind.DELTA_WALL: _delta_wall_parts,
    ModelKind.EXP_ONE_PIECE: _one_piece_parts,
    ModelKind.EXP_TWO_PIECE: _two_piece_parts,
}


def amplitude_parts(spec: ModelSpec, k) -> tuple[complex, complex]:
    """Numerator and denominator (N, D) with r = N/D at complex momentum k."""
    return _PARTS[spec.kind](spec, complex(k))


def pole_denominator(spec: ModelSpec, k) -> complex:
    """D(k): its zeros with Im k < 0 are the Gamow resonances.

    DeltaWall: ``V0 sin ka + k cos ka - ik sin ka``.
    ExpOnePiece: ``1/Gamma(1 + ikc)``, whose zeros ``ikc = -(n+1)`` are
    the false poles on the positive imaginary axis.
    ExpTwoPiece (c > 0): ``W[I_{-ikc}, K_{ikd}] / Gamma(1 + ikc)``.
    ExpTwoPiece (c = 0): ``ik K_{ikd}(s_d) + (s_d/d) K'_{ikd}(s_d)``.
    """
    return amplitude_parts(spec, k)[1]


def reflection(spec: ModelSpec, k) -> complex:
    """Reflection amplitude r = B/A at complex momentum k."""
    num, den = amplitude_parts(spec, k)
    if abs(den) < _TINY:
        raise PoleDivisionError(f"k={complex(k)!r} is a pole of r")
    return num / den


def reflection_at_energy(spec: ModelSpec, E) -> complex:
    return reflection(spec, momentum(E))


def _require(spec, kind):
    if spec.kind is not kind:
        raise ValueError(f"expected a {kind.value} model, got {spec.kind.value}")


def reflection_delta_wall(spec: ModelSpec, k) -> complex:
    _require(spec, ModelKind.DELTA_WALL)
    return reflection(spec, k)


def reflection_exp_one_piece(spec: ModelSpec, k) -> complex:
    _require(spec, ModelKind.EXP_ONE_PIECE)
    return reflection(spec, k)


def reflection_exp_two_piece(spec: ModelSpec, k) -> complex:
    _require(spec, ModelKind.EXP_TWO_PIECE)
    return reflection(spec, k)


def two_piece_bracket(spec: ModelSpec, k) -> complex:
    """Ratio of the two Wronskian-type factors of the two-piece amplitude.

    Equals 1 when c == d and has unit modulus for real k.
    """
    _require(spec, ModelKind.EXP_TWO_PIECE)
    if spec.c == 0:
        raise ValueError("the bracket form needs c > 0")
    k = complex(k)
    K, dK = _right_log_data(spec, k)
    sc = spec.scales
    nu = 1j * k * spec.c
    chain = sc.s_c / spec.c
    ip = bessel_i(nu, sc.s_c)
    im = bessel_i(-nu, sc.s_c)
    return (ip.value * dK - chain * ip.derivative * K) / (
        im.value * dK - chain * im.derivative * K
    )
