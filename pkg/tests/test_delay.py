"""Wigner time delay, phase unwrapping and peak extraction."""

import cmath
import math

import mpmath
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from shape_resonance.delay import (
    MIN_POINTS,
    breit_wigner_amplitude,
    breit_wigner_delay,
    breit_wigner_pole_amplitude,
    delay_from_amplitude,
    delay_profile,
    find_peaks,
    wigner_delay,
)
from shape_resonance.models import ModelSpec, reflection_at_energy
from shape_resonance.reference import DELTA_WALL_PEAK, REFERENCE_SYSTEMS

E0, G0 = 7.3144, 1.9296


# ---------------------------------------------------------------- Breit-Wigner


def test_breit_wigner_peak_and_half_width():
    assert breit_wigner_delay(E0, E0, G0) == pytest.approx(2 / G0, rel=1e-15)
    assert 2 / G0 == pytest.approx(1.0365, abs=1e-4)
    for E in (E0 - G0 / 2, E0 + G0 / 2):
        assert breit_wigner_delay(E, E0, G0) == pytest.approx(1 / G0, rel=1e-14)


def test_breit_wigner_near_peak():
    assert breit_wigner_delay(7.32, E0, G0) > 0.999 * 2 / G0


def test_breit_wigner_rejects_nonpositive_width():
    with pytest.raises(ValueError):
        breit_wigner_delay(1.0, 1.0, 0.0)


@given(st.floats(0.5, 20.0), st.floats(1.0, 15.0), st.floats(0.05, 5.0))
def test_synthetic_amplitude_delay_matches_closed_form(E, E_res, gamma):
    amp = lambda e: breit_wigner_amplitude(e, E_res, gamma)  # noqa: E731
    assert abs(abs(amp(E)) - 1) < 1e-14
    tau = delay_from_amplitude(amp, E)
    exact = breit_wigner_delay(E, E_res, gamma)
    # central-difference truncation: relative error ~ (h / (Gamma/2))^2, h = 1e-6 E
    truncation = 2 * (1e-6 * E / (gamma / 2)) ** 2
    assert abs(tau - exact) < (1e-9 + truncation) * max(1.0, 2 / gamma)


def test_synthetic_delay_on_the_reference_resonance():
    amp = lambda e: breit_wigner_amplitude(e, E0, G0)  # noqa: E731
    grid = np.linspace(1.0, 20.0, 400)
    err = max(abs(delay_from_amplitude(amp, E) - breit_wigner_delay(E, E0, G0)) for E in grid)
    assert err < 1e-9
    assert delay_from_amplitude(amp, E0) == pytest.approx(2 / G0, abs=1e-9)


def test_pole_pair_amplitude_doubles_the_delay():
    amp = lambda e: breit_wigner_pole_amplitude(e, E0, G0)  # noqa: E731
    for E in np.linspace(2, 14, 25):
        assert delay_from_amplitude(amp, E) == pytest.approx(2 * breit_wigner_delay(E, E0, G0), rel=1e-8)


def test_synthetic_phase_is_arctan_shaped():
    for E in np.linspace(2, 14, 25):
        theta = cmath.phase(breit_wigner_amplitude(E, E0, G0))
        # arg(x - i G/2) = -arctan(G / 2x) (mod pi branch)
        expected = -math.atan2(G0 / 2, E - E0)
        assert abs(theta - expected) < 1e-14


# ---------------------------------------------------------------- models


def test_delta_wall_argmax():
    prof = delay_profile(ModelSpec.delta_wall(5.0, 1.0), 1.0, 20.0, 2000)
    assert abs(prof.grid[np.argmax(prof.tau)] - DELTA_WALL_PEAK) < 0.05
    assert len(prof.peaks) == 1
    assert abs(prof.peaks[0].epsilon - DELTA_WALL_PEAK) < 0.05


def test_one_piece_delay_matches_digamma_form():
    c, V0 = 0.5, 5.0
    spec = ModelSpec.exp_one_piece(V0, c)
    log_half_s = math.log(c * math.sqrt(V0) / 2)
    for E in (0.5, 3.0, 6.5, 20.0, 50.0):
        k = math.sqrt(E)
        expected = (c / k) * (float(mpmath.re(mpmath.digamma(1 + 1j * k * c))) - log_half_s)
        assert wigner_delay(spec, E) == pytest.approx(expected, rel=1e-7)


def test_delay_step_halving():
    spec = REFERENCE_SYSTEMS[0].spec
    amp = lambda e: reflection_at_energy(spec, e)  # noqa: E731
    for E in (3.0, 8.95, 17.3, 29.0):
        t1 = delay_from_amplitude(amp, E)
        t2 = delay_from_amplitude(amp, E, rel_step=5e-7)
        assert abs(t1 - t2) < 1e-7 * max(1.0, abs(t2))


@pytest.mark.parametrize(
    "spec",
    [ModelSpec.delta_wall(5.0, 1.0)] + [ref.spec for ref in REFERENCE_SYSTEMS],
    ids=["delta-wall", "c=0.5", "c=0"],
)
def test_delay_matches_unwrapped_phase_derivative(spec):
    delta = 1e-4
    for E in np.linspace(2.0, 28.0, 12):
        r = [reflection_at_energy(spec, e) for e in (E - delta, E, E + delta)]
        theta = np.unwrap(np.angle(r))
        fd = (theta[2] - theta[0]) / (2 * delta)
        tau = wigner_delay(spec, E)
        assert abs(tau - fd) < 1e-6 * max(abs(tau), 1.0)


@pytest.fixture(scope="module")
def profiles(reference_searches):
    """The [1, 30], 2000-point profiles the pole searches were seeded from."""
    return {label: search.profile for label, search in reference_searches.items()}


def test_profile_invariants(profiles):
    for prof in profiles.values():
        assert np.all(np.diff(prof.grid) > 0)
        assert np.all(np.abs(np.diff(prof.theta)) < math.pi)
        assert np.all(np.abs(prof.R - 1) < 1e-8)
        for peak in prof.peaks:
            assert prof.grid[0] < peak.epsilon < prof.grid[-1]
        pts = prof.points
        assert len(pts) == len(prof.grid)
        assert pts[10].tau == prof.tau[10] and pts[10].R == pytest.approx(1.0)


@pytest.mark.parametrize("ref", REFERENCE_SYSTEMS, ids=lambda r: r.label)
def test_peaks_close_to_pole_energies(ref, reference_searches):
    poles = reference_searches[ref.label].poles
    assert len(poles) == 5
    for pole in poles:
        assert abs(pole.epsilon - pole.E_n) < 0.5


def test_coarse_grid_consistent_with_fine_grid(profiles):
    spec = REFERENCE_SYSTEMS[0].spec
    coarse = delay_profile(spec, 1.0, 30.0, MIN_POINTS)
    fine = profiles[REFERENCE_SYSTEMS[0].label]
    interp = np.interp(coarse.grid, fine.grid, fine.tau)
    assert np.allclose(coarse.tau, interp, rtol=1e-5, atol=1e-6)
    assert np.array_equal(np.sign(np.diff(coarse.tau)), np.sign(np.diff(interp)))


def test_profile_validation():
    spec = ModelSpec.delta_wall(5.0, 1.0)
    with pytest.raises(ValueError):
        delay_profile(spec, 1.0, 20.0, MIN_POINTS - 1)
    with pytest.raises(ValueError):
        delay_profile(spec, 5.0, 1.0, 100)
    with pytest.raises(ValueError):
        wigner_delay(spec, 0.0)


def test_parabolic_refinement_recovers_vertex():
    grid = np.linspace(0.0, 10.0, 41)
    tau = -(grid - 3.3) ** 2
    (peak,) = find_peaks(grid, tau)
    assert peak.epsilon == pytest.approx(3.3, abs=1e-12)
    assert peak.height == pytest.approx(0.0, abs=1e-12)
    assert find_peaks(grid, grid) == []


# ---------------------------------------------------------------- peak height


def _delta_wall_height_ratio(delta_wall_pole, factor):
    prof = delay_profile(ModelSpec.delta_wall(5.0, 1.0), 1.0, 20.0, 2000)
    return prof.peaks[0].height / (factor / delta_wall_pole.gamma)


def test_delta_wall_peak_height_vs_two_over_gamma(delta_wall_pole):
    """Peak height within 35 % of 2/Gamma for the delta-wall resonance."""
    assert abs(_delta_wall_height_ratio(delta_wall_pole, 2.0) - 1) < 0.35


def test_delta_wall_peak_height_vs_pole_pair(delta_wall_pole):
    """A pole with its mirror zero gives 4/Gamma; the broad-resonance
    background keeps the delta wall about 15 % below that."""
    assert abs(_delta_wall_height_ratio(delta_wall_pole, 4.0) - 1) < 0.35
