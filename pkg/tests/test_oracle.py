"""Direct RK4 integration of the Schrodinger equation vs the closed forms."""

import math

import numpy as np
import pytest
from scipy.integrate import solve_ivp

from shape_resonance.errors import NotPointwiseError, RegionError
from shape_resonance.models import ModelSpec, potential_value, reflection_at_energy
from shape_resonance.oracle import (
    IntegrationConfig,
    integrate_inward,
    oracle_reflection,
    oracle_reflection_grid,
    wkb_start,
)

SPECS = {
    "exp1": ModelSpec.exp_one_piece(5.0, 0.5),
    "exp2": ModelSpec.exp_two_piece(5.0, 0.5, 5.0),
    "exp2-step": ModelSpec.exp_two_piece(5.0, 0.0, 5.0),
}
ENERGIES = np.linspace(1.0, 30.0, 100)


@pytest.fixture(scope="module")
def oracle_grid():
    return {name: oracle_reflection_grid(spec, ENERGIES) for name, spec in SPECS.items()}


@pytest.mark.parametrize("name", SPECS)
def test_closed_form_matches_oracle(name, oracle_grid):
    closed = np.array([reflection_at_energy(SPECS[name], E) for E in ENERGIES])
    assert np.max(np.abs(closed - oracle_grid[name])) < 1e-6


@pytest.mark.parametrize("name", SPECS)
def test_phase_agreement(name, oracle_grid):
    closed = np.array([reflection_at_energy(SPECS[name], E) for E in ENERGIES])
    dphi = np.angle(oracle_grid[name] / closed)
    assert np.max(np.abs(dphi)) < 1e-6


@pytest.mark.parametrize("name", SPECS)
@pytest.mark.parametrize("E", [2.0, 10.0, 25.0])
def test_flux_conservation(name, E):
    assert abs(abs(oracle_reflection(SPECS[name], E)) - 1) < 1e-7


@pytest.mark.parametrize("name, E", [("exp1", 5.0), ("exp2", 10.0), ("exp2-step", 10.0)])
def test_single_energy_examples(name, E):
    spec = SPECS[name]
    assert abs(oracle_reflection(spec, E) - reflection_at_energy(spec, E)) < 1e-6


def test_independent_of_scipy_integrator():
    """A second, adaptive integrator reproduces the oracle amplitude."""
    spec, E = SPECS["exp2"], 12.0
    k = math.sqrt(E)
    x_right, x_left = 0.5 * 5.0 * math.log(1e3 * E / 5.0) + 0.1, -14.0
    psi0, dpsi0 = wkb_start(spec, E, x_right)

    def rhs(x, y):
        v = potential_value(spec, x) - E
        return [y[1], v * y[0]]

    # psi is real for real E; it grows by hundreds of e-folds, so rescale per segment
    y = np.array([psi0.real, dpsi0.real])
    knots = np.concatenate([np.arange(x_right, 0.0, -0.5), np.arange(0.0, x_left - 0.25, -0.5)])
    for x0, x1 in zip(knots[:-1], knots[1:]):
        y = solve_ivp(rhs, (x0, x1), y, method="DOP853", rtol=1e-12, atol=0).y[:, -1]
        y = y / np.abs(y).max()
    psi, dpsi = y
    A = np.exp(-1j * k * x_left) * (1j * k * psi + dpsi) / (2j * k)
    B = np.exp(1j * k * x_left) * (1j * k * psi - dpsi) / (2j * k)
    assert abs(B / A - oracle_reflection(spec, E)) < 1e-8


# ---------------------------------------------------------------- WKB seed


def test_wkb_seed_against_asymptotic_log_derivative():
    spec = ModelSpec.exp_one_piece(5.0, 0.5)
    E, c, s = 5.0, 0.5, 0.5 * math.sqrt(5)
    x_right = 0.5 * c * math.log(1e3 * E / 5.0) + 0.5
    psi, dpsi = wkb_start(spec, E, x_right)
    asym = -(1 / (2 * c) + (s / c) * math.exp(x_right / c))
    assert abs((dpsi / psi).real / asym - 1) < 1e-2
    V = potential_value(spec, x_right)
    q = math.sqrt(V - E)
    dq = (V / c) / q
    assert abs(dpsi / psi + q + dq / (2 * q)) < 1e-12 * q


def test_wkb_exact_for_flat_barrier():
    # q' -> 0 makes the seed exact: psi'/psi = -kappa
    spec = ModelSpec.exp_one_piece(1.0, 1e9)
    E, x = 0.25, 1.0
    psi, dpsi = wkb_start(spec, E, x, depth_factor=1.0)
    kappa = math.sqrt(potential_value(spec, x) - E)
    assert abs(dpsi / psi + kappa) < 1e-8


def test_wkb_region_error():
    with pytest.raises(RegionError):
        wkb_start(SPECS["exp1"], 10.0, 0.1)


# ---------------------------------------------------------------- convergence


@pytest.mark.parametrize("name", SPECS)
def test_insensitive_to_deeper_start(name):
    spec, E = SPECS[name], 10.0
    base = IntegrationConfig()
    r0, trace = integrate_inward(spec, E, base)
    x_right = trace.x[0]
    r1 = oracle_reflection(spec, E, IntegrationConfig(x_right=x_right + 1.0))
    assert abs(r1 - r0) < 1e-8


@pytest.mark.parametrize("name", ["exp1", "exp2"])
def test_insensitive_to_pushing_x_left(name):
    spec, E = SPECS[name], 10.0
    _, trace = integrate_inward(spec, E)
    L = -trace.x[-1]
    r1 = oracle_reflection(spec, E, IntegrationConfig(x_left=-L))
    r2 = oracle_reflection(spec, E, IntegrationConfig(x_left=-2 * L))
    assert abs(r2 - r1) < 1e-7


def test_step_halving_invariant():
    h = IntegrationConfig().step
    for spec in SPECS.values():
        r = [oracle_reflection_grid(spec, [2.0, 25.0], IntegrationConfig(step=s))
             for s in (h, h / 2, h / 4)]
        assert np.all(np.abs(r[0] - r[1]) < 16 * np.abs(r[1] - r[2]) + 1e-12)


def test_fourth_order_convergence():
    h = 4e-3
    for spec in SPECS.values():
        r = [oracle_reflection_grid(spec, [2.0, 10.0, 25.0], IntegrationConfig(step=s))
             for s in (h, h / 2, h / 4)]
        order = np.log2(np.abs(r[0] - r[1]) / np.abs(r[1] - r[2]))
        assert np.all(np.abs(order - 4) < 0.1)


# ---------------------------------------------------------------- trace / errors


def test_trace_is_finite_and_renormalized():
    spec = ModelSpec.exp_one_piece(5.0, 0.5)
    r, trace = integrate_inward(spec, 1.0, IntegrationConfig(x_right=6.0))
    assert np.all(np.isfinite(trace.psi)) and np.all(np.isfinite(trace.dpsi))
    assert len(trace.renormalizations) > 0
    assert np.all(np.abs(trace.psi) <= 1e100 * 1.001)
    assert abs(r - reflection_at_energy(spec, 1.0)) < 1e-6
    assert np.all(np.diff(trace.x) < 0)


def test_flat_region_violation():
    with pytest.raises(RegionError):
        oracle_reflection(SPECS["exp1"], 10.0, IntegrationConfig(x_left=-1.0))


def test_delta_wall_rejected():
    with pytest.raises(NotPointwiseError):
        oracle_reflection(ModelSpec.delta_wall(5.0, 1.0), 5.0)


@pytest.mark.parametrize("kwargs", [dict(step=0.0), dict(x_left=1.0), dict(x_right=-1.0)])
def test_config_validation(kwargs):
    with pytest.raises(ValueError):
        IntegrationConfig(**kwargs)
