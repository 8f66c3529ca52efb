"""Complex gamma function and modified Bessel functions of complex order.

The Bessel routines accept a complex order ``nu`` and a positive real
argument ``z``, which is all the exponential potentials need: the orders
are ``+-ikc`` and ``ikd`` and the arguments are ``s e^{x/c}``.

``I_nu`` comes from its ascending series. ``K_nu`` uses the connection
formula ``(pi/2)(I_{-nu} - I_nu)/sin(nu pi)`` for small arguments and the
integral ``int_0^inf exp(-z cosh t) cosh(nu t) dt`` for larger ones.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, GammaPoleError, OrderError

__all__ = [
    "BesselEval",
    "complex_gamma",
    "reciprocal_gamma",
    "sinpi",
    "bessel_i",
    "bessel_k",
    "gauss_kronrod",
]

# Lanczos approximation, g = 7, nine terms.
_LANCZOS_G = 7.0
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)
_POLE_TOL = 1e-14


@dataclass(frozen=True)
class BesselEval:
    """Value of a Bessel function and its derivative with respect to z."""

    value: complex
    derivative: complex

    def __post_init__(self):
        for v in (self.value, self.derivative):
            if not (math.isfinite(v.real) and math.isfinite(v.imag)):
                raise ConvergenceError(f"non-finite Bessel result {v!r}")


def _as_complex(z) -> complex:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"non-finite argument {z!r}")
    return z


def sinpi(z) -> complex:
    """sin(pi z) with exact argument reduction on the real part."""
    z = complex(z)
    n = round(z.real)
    s = cmath.sin(math.pi * (z - n))
    return -s if n % 2 else s


def _nonpositive_integer(z: complex) -> bool:
    n = round(z.real)
    return n <= 0 and abs(z - n) < _POLE_TOL


def _lanczos_log_gamma(z: complex) -> complex:
    # valid for Re z >= 0.5
    z = z - 1.0
    acc = _LANCZOS_COEF[0]
    for i, c in enumerate(_LANCZOS_COEF[1:], start=1):
        acc += c / (z + i)
    t = z + _LANCZOS_G + 0.5
    return _HALF_LOG_2PI + (z + 0.5) * cmath.log(t) - t + cmath.log(acc)


def complex_gamma(z) -> complex:
    """Gamma function of a complex argument.

    Lanczos approximation for ``Re z >= 0.5``; the reflection formula
    ``Gamma(z) Gamma(1-z) = pi / sin(pi z)`` elsewhere.

    Raises
    ------
    GammaPoleError
        If ``z`` lies within 1e-14 of a non-positive integer.
    """
    z = _as_complex(z)
    if _nonpositive_integer(z):
        raise GammaPoleError(f"Gamma has a pole at {z!r}")
    if z.real < 0.5:
        return math.pi / (sinpi(z) * cmath.exp(_lanczos_log_gamma(1.0 - z)))
    return cmath.exp(_lanczos_log_gamma(z))


def reciprocal_gamma(z) -> complex:
    """1/Gamma(z), an entire function (exactly zero at the poles of Gamma)."""
    z = _as_complex(z)
    if z.real < 0.5:
        if _nonpositive_integer(z):
            return 0j
        return sinpi(z) * cmath.exp(_lanczos_log_gamma(1.0 - z)) / math.pi
    return cmath.exp(-_lanczos_log_gamma(z))


# ---------------------------------------------------------------------------
# I_nu: ascending series
# ---------------------------------------------------------------------------

_SERIES_MAX_TERMS = 200
_SERIES_RTOL = 1e-16


def _i_series(nu: complex, z: float) -> tuple[complex, complex]:
    """(I_nu(z), I'_nu(z)) from the ascending series, differentiated termwise."""
    if nu.imag == 0.0 and nu.real < 0 and nu.real == round(nu.real):
        nu = -nu  # I_{-n} = I_n
    half = 0.5 * z
    term = cmath.exp(nu * math.log(half)) * reciprocal_gamma(nu + 1.0)
    value = term
    deriv = term * nu / z
    q = half * half
    m_min = max(0.0, -nu.real)
    for m in range(1, _SERIES_MAX_TERMS + 1):
        term *= q / (m * (nu + m))
        value += term
        dterm = term * (nu + 2 * m) / z
        deriv += dterm
        if (
            m > m_min
            and abs(term) <= _SERIES_RTOL * abs(value)
            and abs(dterm) <= _SERIES_RTOL * abs(deriv)
        ):
            return value, deriv
    raise ConvergenceError(
        f"I series did not converge in {_SERIES_MAX_TERMS} terms (nu={nu!r}, z={z!r})"
    )


def _check_argument(z) -> float:
    z = float(z)
    if not (z > 0.0 and math.isfinite(z)):
        raise ValueError(f"Bessel argument must be positive and finite, got {z!r}")
    return z


def bessel_i(nu, z) -> BesselEval:
    """Modified Bessel function of the first kind, I_nu(z), and I'_nu(z).

    Parameters
    ----------
    nu : complex
        Order, any complex value (tested for ``|nu| <= 40``).
    z : float
        Positive real argument, ``z <= 50`` is the supported range.

    Returns
    -------
    BesselEval
        ``value = sum_m (z/2)^(nu+2m) / (m! Gamma(nu+m+1))`` and its
        termwise derivative.
    """
    nu = _as_complex(nu)
    z = _check_argument(z)
    value, deriv = _i_series(nu, z)
    return BesselEval(value, deriv)


# ---------------------------------------------------------------------------
# Adaptive Gauss-Kronrod (7/15) quadrature for vector-valued integrands
# ---------------------------------------------------------------------------

_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])
# 15 nodes on [-1, 1] and the matching weights; Gauss nodes are xgk[1::2].
GK_NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])
GK_KRONROD_WEIGHTS = np.concatenate([_WGK[:-1], _WGK[::-1]])
GK_GAUSS_WEIGHTS = np.zeros(15)
GK_GAUSS_WEIGHTS[1:7:2] = _WG[:3]
GK_GAUSS_WEIGHTS[7] = _WG[3]
GK_GAUSS_WEIGHTS[9:15:2] = _WG[2::-1]


def gauss_kronrod(f, a: float, b: float, atol: float, max_intervals: int = 4000):
    """Adaptive interval-halving Gauss-Kronrod 7/15 quadrature.

    ``f`` maps a 1-D array of nodes to an array of shape ``(ncomp, nnodes)``.
    An interval is accepted once its Kronrod/Gauss difference is below its
    length-proportional share of ``atol``; all pending intervals are
    evaluated in one batch per sweep.

    Returns ``(integral, abs_integral)``, both of shape ``(ncomp,)``; the
    second is the integral of ``|f|`` and measures cancellation.
    """
    total = None
    total_abs = None
    pending = np.array([[a, b]], dtype=float)
    n_used = 0
    width = b - a
    while pending.size:
        n_used += len(pending)
        if n_used > max_intervals:
            raise ConvergenceError(f"quadrature exceeded {max_intervals} intervals")
        mid = 0.5 * (pending[:, 0] + pending[:, 1])
        rad = 0.5 * (pending[:, 1] - pending[:, 0])
        nodes = mid[:, None] + rad[:, None] * GK_NODES[None, :]
        vals = f(nodes.ravel())
        vals = vals.reshape(vals.shape[0], *nodes.shape)
        kron = (vals * GK_KRONROD_WEIGHTS).sum(axis=-1) * rad
        gauss = (vals * GK_GAUSS_WEIGHTS).sum(axis=-1) * rad
        absint = (np.abs(vals) * GK_KRONROD_WEIGHTS).sum(axis=-1) * rad
        err = np.abs(kron - gauss).max(axis=0)
        ok = err <= atol * (2.0 * rad) / width
        if total is None:
            total = np.zeros(vals.shape[0], dtype=vals.dtype)
            total_abs = np.zeros(vals.shape[0])
        total = total + kron[:, ok].sum(axis=1)
        total_abs = total_abs + absint[:, ok].sum(axis=1)
        bad = pending[~ok]
        if bad.size:
            m = 0.5 * (bad[:, 0] + bad[:, 1])
            pending = np.concatenate(
                [np.stack([bad[:, 0], m], axis=1), np.stack([m, bad[:, 1]], axis=1)]
            )
        else:
            pending = bad
    return total, total_abs


# ---------------------------------------------------------------------------
# K_nu
# ---------------------------------------------------------------------------

K_SWITCH = 2.0
K_QUAD_ATOL = 1e-13
_LOG_TRUNC = math.log(1e18)
_INTEGER_TOL = 1e-12
_ILL_CONDITIONED = 1e3


def _k_connection(nu: complex, z: float) -> tuple[complex, complex, float]:
    ip, dip = _i_series(-nu, z)
    im, dim = _i_series(nu, z)
    factor = 0.5 * math.pi / sinpi(nu)
    value = factor * (ip - im)
    deriv = factor * (dip - dim)
    scale = max(abs(ip), abs(im))
    cond = scale / abs(ip - im) if ip != im else math.inf
    return value, deriv, cond


def _truncation_point(nu: complex, z: float) -> float:
    # exp(-z (cosh T - 1)) * exp((|Re nu| + 1) T) < 1e-18 on the scaled integrand
    grow = abs(nu.real) + 1.0
    t = 1.0
    while z * (math.cosh(t) - 1.0) - grow * t < _LOG_TRUNC:
        t *= 1.25
    return t


def _k_quadrature(nu: complex, z: float) -> tuple[complex, complex, float]:
    def integrand(t):
        w = np.exp(-z * (np.cosh(t) - 1.0))
        c = np.cosh(nu * t) * w
        return np.stack([c, -np.cosh(t) * c])

    upper = _truncation_point(nu, z)
    (s0, s1), (a0, _) = gauss_kronrod(integrand, 0.0, upper, K_QUAD_ATOL)
    scale = math.exp(-z)
    cond = a0 / abs(s0) if s0 != 0 else math.inf
    return complex(s0) * scale, complex(s1) * scale, cond


def bessel_k(nu, z, method: str = "auto") -> BesselEval:
    """Modified Bessel function of the second kind, K_nu(z), and K'_nu(z).

    Parameters
    ----------
    nu : complex
        Non-integer complex order.
    z : float
        Positive real argument.
    method : {"auto", "connection", "quadrature"}
        ``"auto"`` uses the connection formula for ``z <= 2`` and the
        integral representation above, falling back to the connection
        formula when the integral loses more than three digits to
        oscillation (large ``|Im nu|`` relative to ``z``).

    Raises
    ------
    OrderError
        For integer orders, or for the quadrature route when
        ``|Re nu| >= 1`` and ``z < |Re nu|``.
    ConvergenceError
        If the series or the quadrature fails to converge.
    """
    nu = _as_complex(nu)
    z = _check_argument(z)
    if abs(nu - round(nu.real)) < _INTEGER_TOL:
        raise OrderError(f"integer order {nu!r} is not supported")
    if method not in ("auto", "connection", "quadrature"):
        raise ValueError(f"unknown method {method!r}")

    if method == "connection" or (method == "auto" and z <= K_SWITCH):
        value, deriv, _ = _k_connection(nu, z)
        return BesselEval(value, deriv)

    if abs(nu.real) >= 1.0 and z < abs(nu.real):
        if method == "quadrature":
            raise OrderError(
                f"integral representation unreliable for Re nu={nu.real} > z={z}"
            )
        value, deriv, _ = _k_connection(nu, z)
        return BesselEval(value, deriv)

    value, deriv, cond = _k_quadrature(nu, z)
    if method == "auto" and cond > _ILL_CONDITIONED:
        cv, cd, ccond = _k_connection(nu, z)
        if ccond < cond:
            value, deriv = cv, cd
    return BesselEval(value, deriv)
