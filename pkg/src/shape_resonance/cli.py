"""Command-line interface.

Subcommands: ``resonances``, ``timedelay``, ``gamow``, ``verify``, ``table1``.

Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 pole search
failed for every seed, 4 requested pole not found.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from .delay import MIN_POINTS, delay_profile
from .errors import ShapeResonanceError
from .gamow import gamow_wavefunction
from .models import ModelKind, ModelSpec, reflection_at_energy, two_piece_bracket
from .oracle import IntegrationConfig, oracle_reflection_grid
from .output import OutputRecord, model_metadata
from .poles import SearchConfig, search_poles
from .reference import PEAK_TOL, POLE_TOL, REFERENCE_SYSTEMS
from .special import bessel_i, bessel_k

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_SEARCH = 3
EXIT_NO_POLE = 4

MODEL_NAMES = {
    "delta-wall": ModelKind.DELTA_WALL,
    "exp1": ModelKind.EXP_ONE_PIECE,
    "exp2": ModelKind.EXP_TWO_PIECE,
}

ORACLE_TOL = 1e-6
WRONSKIAN_TOL = 1e-9
UNIMODULAR_TOL = 1e-10
MIN_SAMPLES = 3


class UsageError(Exception):
    pass


def _add_model_flags(p):
    p.add_argument("--model", required=True, choices=sorted(MODEL_NAMES))
    p.add_argument("--v0", type=float, required=True, help="barrier strength V0")
    p.add_argument("--a", type=float, help="delta position (delta-wall)")
    p.add_argument("--c", type=float, help="left decay length (exp1, exp2)")
    p.add_argument("--d", type=float, help="right decay length (exp2)")


def _add_output_flags(p):
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("-o", "--output", default="-", help="output file (default: stdout)")


def _add_window_flags(p, points=2000):
    p.add_argument("--emin", type=float, default=1.0)
    p.add_argument("--emax", type=float, default=30.0)
    p.add_argument("--points", type=int, default=points)


def _model_from_args(args) -> ModelSpec:
    kind = MODEL_NAMES[args.model]
    try:
        if kind is ModelKind.DELTA_WALL:
            return ModelSpec(kind, args.v0, a=args.a)
        if kind is ModelKind.EXP_ONE_PIECE:
            return ModelSpec(kind, args.v0, c=args.c)
        return ModelSpec(kind, args.v0, c=args.c, d=args.d)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"invalid model parameters: {exc}") from exc


def _check_window(args):
    if not 0 < args.emin < args.emax:
        raise UsageError("need 0 < --emin < --emax")
    if args.points < MIN_POINTS:
        raise UsageError(f"--points must be at least {MIN_POINTS}")


def _search_config(args) -> SearchConfig:
    return SearchConfig(
        e_min=args.emin, e_max=args.emax, n_points=args.points,
        seed_gamma=getattr(args, "seed_gamma", 1.0),
        max_poles=getattr(args, "max_poles", None),
    )


def cmd_resonances(args) -> int:
    spec = _model_from_args(args)
    _check_window(args)
    search = search_poles(spec, _search_config(args))
    rows = [
        [p.n, p.E_n, p.half_width, p.k_pole.real, p.k_pole.imag, p.epsilon, p.lifetime]
        for p in search.poles
    ]
    meta = model_metadata(spec)
    meta.update(emin=args.emin, emax=args.emax, points=args.points)
    if not rows:
        meta["note"] = "no resonances found"
        print("no resonances found", file=sys.stderr)
    OutputRecord(
        ["n", "E_n", "Gamma_n/2", "k_re", "k_im", "epsilon_n", "lifetime"], rows, meta
    ).write(args.format, args.output)
    if search.all_seeds_failed:
        print("pole search failed for every seed", file=sys.stderr)
        return EXIT_SEARCH
    return EXIT_OK


def cmd_timedelay(args) -> int:
    spec = _model_from_args(args)
    _check_window(args)
    prof = delay_profile(spec, args.emin, args.emax, args.points)
    rows = [
        [float(E), float(t), float(th), float(R)]
        for E, t, th, R in zip(prof.grid, prof.tau, prof.theta, prof.R)
    ]
    meta = model_metadata(spec)
    blocks = {}
    if args.peaks:
        blocks["peaks"] = (
            ["n", "epsilon_n", "tau_peak"],
            [[i, p.epsilon, p.height] for i, p in enumerate(prof.peaks)],
        )
    OutputRecord(["E", "tau", "theta_unwrapped", "R"], rows, meta, blocks).write(
        args.format, args.output
    )
    return EXIT_OK


def cmd_gamow(args) -> int:
    spec = _model_from_args(args)
    _check_window(args)
    if args.samples < MIN_SAMPLES:
        raise UsageError(f"--samples must be at least {MIN_SAMPLES}")
    if not args.xmin < args.xmax:
        raise UsageError("need --xmin < --xmax")
    if args.pole_index < 0:
        raise UsageError("--pole-index must be non-negative")
    poles = search_poles(spec, _search_config(args)).poles
    if args.pole_index >= len(poles):
        print(
            f"pole {args.pole_index} not found ({len(poles)} resonance(s) in window)",
            file=sys.stderr,
        )
        return EXIT_NO_POLE
    pole = poles[args.pole_index]
    prof = gamow_wavefunction(spec, pole, args.xmin, args.xmax, args.samples)
    meta = model_metadata(spec)
    meta.update(
        pole_index=pole.n, E_n=pole.E_n, half_width=pole.half_width,
        alpha=prof.alpha, beta=prof.beta, Gamma=pole.gamma, lifetime=pole.lifetime,
        normalization="psi(xmin)=1",
    )
    rows = [
        [float(x), float(p.real), float(p.imag), float(abs(p))]
        for x, p in zip(prof.x_grid, prof.psi)
    ]
    OutputRecord(["x", "psi_re", "psi_im", "abs_psi"], rows, meta).write(
        args.format, args.output
    )
    return EXIT_OK


def _wronskian_residual(nu, z) -> float:
    i = bessel_i(nu, z)
    k = bessel_k(nu, z)
    return abs(i.value * k.derivative - i.derivative * k.value + 1.0 / z)


def cmd_verify(args) -> int:
    spec = _model_from_args(args)
    if spec.kind is ModelKind.DELTA_WALL:
        raise UsageError("verify needs a pointwise potential (exp1 or exp2)")
    _check_window(args)
    energies = np.linspace(args.emin, args.emax, args.points)
    closed = np.array([reflection_at_energy(spec, E) for E in energies])
    oracle = oracle_reflection_grid(spec, energies, IntegrationConfig(step=args.step))
    dev = float(np.abs(closed - oracle).max())

    sc = spec.scales
    pairs = []
    for E in energies:
        k = np.sqrt(E)
        if spec.c:
            pairs.append((1j * k * spec.c, sc.s_c))
        if spec.kind is ModelKind.EXP_TWO_PIECE:
            pairs.append((1j * k * spec.d, sc.s_d))
    wr = max(_wronskian_residual(nu, z) for nu, z in pairs)

    unimod = float(np.abs(np.abs(closed) - 1.0).max())
    if spec.kind is ModelKind.EXP_TWO_PIECE and spec.c > 0:
        bracket = max(abs(abs(two_piece_bracket(spec, np.sqrt(E))) - 1.0) for E in energies)
        unimod = max(unimod, bracket)

    checks = [
        ("oracle_max_abs_dev", dev, ORACLE_TOL),
        ("wronskian_max_residual", wr, WRONSKIAN_TOL),
        ("unimodularity_max_residual", unimod, UNIMODULAR_TOL),
    ]
    rows = [[name, value, tol, value < tol] for name, value, tol in checks]
    meta = model_metadata(spec)
    meta.update(emin=args.emin, emax=args.emax, points=args.points, step=args.step)
    OutputRecord(["check", "value", "threshold", "pass"], rows, meta).write(
        args.format, args.output
    )
    return EXIT_OK if all(r[3] for r in rows) else EXIT_VERIFY


def cmd_table1(args) -> int:
    rows = []
    ok = True
    for ref in REFERENCE_SYSTEMS:
        cfg = SearchConfig(e_min=1.0, e_max=30.0, n_points=2000)
        poles = search_poles(ref.spec, cfg).poles
        for n, (e_ref, eps_ref) in enumerate(zip(ref.energies, ref.peaks)):
            if n < len(poles):
                p = poles[n]
                e_calc, hw_calc, eps_calc = p.E_n, p.half_width, p.epsilon
                d_e = abs(e_calc - e_ref.real)
                d_hw = abs(hw_calc - (-e_ref.imag))
                d_eps = abs(eps_calc - eps_ref)
                pole_ok = d_e < POLE_TOL and d_hw < POLE_TOL
                peak_ok = d_eps < PEAK_TOL
            else:
                e_calc = hw_calc = eps_calc = d_e = d_hw = d_eps = None
                pole_ok = peak_ok = False
            ok &= pole_ok and peak_ok
            rows.append([
                ref.label, n,
                e_ref.real, e_calc, d_e,
                -e_ref.imag, hw_calc, d_hw,
                eps_ref, eps_calc, d_eps,
                pole_ok, peak_ok,
            ])
    meta = model_metadata(None)
    meta.update(V0=5.0, pole_tol=POLE_TOL, peak_tol=PEAK_TOL, window="[1, 30], 2000 points")
    cols = [
        "system", "n",
        "E_ref", "E_calc", "dE",
        "half_width_ref", "half_width_calc", "d_half_width",
        "epsilon_ref", "epsilon_calc", "d_epsilon",
        "pole_pass", "peak_pass",
    ]
    OutputRecord(cols, rows, meta).write(args.format, args.output)
    return EXIT_OK if ok else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shape-resonance",
        description="Resonances, time delay and Gamow states of 1D rising potentials "
        "(units 2m = 1, hbar = 1).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("resonances", help="locate complex-energy poles")
    _add_model_flags(p)
    _add_window_flags(p)
    p.add_argument("--seed-gamma", type=float, default=1.0)
    p.add_argument("--max-poles", type=int)
    _add_output_flags(p)
    p.set_defaults(func=cmd_resonances)

    p = sub.add_parser("timedelay", help="Wigner reflection time delay on a grid")
    _add_model_flags(p)
    _add_window_flags(p)
    p.add_argument("--peaks", action="store_true", help="append refined peak positions")
    _add_output_flags(p)
    p.set_defaults(func=cmd_timedelay)

    p = sub.add_parser("gamow", help="resonant eigenstate on an x grid")
    _add_model_flags(p)
    _add_window_flags(p)
    p.add_argument("--pole-index", type=int, default=0)
    p.add_argument("--xmin", type=float, default=-8.0)
    p.add_argument("--xmax", type=float, default=0.0)
    p.add_argument("--samples", type=int, default=801)
    _add_output_flags(p)
    p.set_defaults(func=cmd_gamow)

    p = sub.add_parser("verify", help="closed forms vs direct integration and identities")
    _add_model_flags(p)
    _add_window_flags(p, points=100)
    p.add_argument("--step", type=float, default=1e-3, help="RK4 step of the oracle")
    _add_output_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table1", help="compare both reference systems with published values")
    _add_output_flags(p)
    p.set_defaults(func=cmd_table1)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ShapeResonanceError as exc:
        print(f"{parser.prog}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_VERIFY
