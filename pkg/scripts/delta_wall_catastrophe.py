"""Delta barrier next to a rigid wall: the single resonance and its Gamow state.

Prints the pole, the delay peak, and the growth rate of |psi| on the exit
side, which should match beta = -Im k0.

Usage: python3 scripts/delta_wall_catastrophe.py [--v0 5] [--a 1] [--csv out.csv]
"""

from __future__ import annotations

import argparse

from shape_resonance import ModelSpec, SearchConfig, delay_profile, gamow_wavefunction, search_poles
from shape_resonance.gamow import envelope_slope


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--v0", type=float, default=5.0)
    ap.add_argument("--a", type=float, default=1.0)
    ap.add_argument("--emax", type=float, default=20.0)
    ap.add_argument("--xmin", type=float, default=-8.0)
    ap.add_argument("--csv", help="write x, |psi| to this file")
    args = ap.parse_args(argv)

    spec = ModelSpec.delta_wall(args.v0, args.a)
    search = search_poles(spec, SearchConfig(e_min=1.0, e_max=args.emax))
    if not search.poles:
        print("no resonance found in the window")
        return 1
    pole = search.poles[0]
    prof = delay_profile(spec, 1.0, args.emax, 2000)
    print(f"pole k0      = {pole.k_pole:.6f}")
    print(f"pole E0      = {pole.energy:.6f}  (Gamma = {pole.gamma:.5f}, lifetime = {pole.lifetime:.4f})")
    print(f"delay peaks  = {[round(p.epsilon, 4) for p in prof.peaks]}")
    print(f"peak heights = {[round(p.height, 4) for p in prof.peaks]}  vs 2/Gamma = {2 / pole.gamma:.4f}")

    gp = gamow_wavefunction(spec, pole, args.xmin, 0.0, 801)
    slope = envelope_slope(gp, args.xmin, -1.5 * args.a)
    print(f"envelope     : d ln|psi|/dx = {slope:.5f}, beta = {gp.beta:.5f}")
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write("x,abs_psi\n")
            for x, v in zip(gp.x_grid, gp.abs_psi):
                fh.write(f"{x:.17g},{v:.17g}\n")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
