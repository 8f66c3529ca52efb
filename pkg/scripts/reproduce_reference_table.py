"""Recompute the reference resonance table for V0 = 5, d = 5, c in {0.5, 0}.

For every pole prints E_n, Gamma_n/2 and the delay peak next to the
published value, with the absolute difference.

Usage: python3 scripts/reproduce_reference_table.py
"""

from __future__ import annotations

import argparse

from shape_resonance import SearchConfig, search_poles
from shape_resonance.reference import PEAK_TOL, POLE_TOL, REFERENCE_SYSTEMS


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--points", type=int, default=2000)
    args = ap.parse_args(argv)

    worst_pole = worst_peak = 0.0
    for ref in REFERENCE_SYSTEMS:
        search = search_poles(ref.spec, SearchConfig(e_min=1.0, e_max=30.0, n_points=args.points))
        print(f"\n{ref.label}")
        print(f"{'n':>2} {'E_n':>8} {'ref':>6} {'G/2':>7} {'ref':>6} {'eps':>8} {'ref':>6} {'|d eps|':>8}")
        for p, e, eps in zip(search.poles, ref.energies, ref.peaks):
            d_pole = max(abs(p.E_n - e.real), abs(p.half_width + e.imag))
            d_peak = abs(p.epsilon - eps) if p.epsilon is not None else float("inf")
            worst_pole, worst_peak = max(worst_pole, d_pole), max(worst_peak, d_peak)
            print(f"{p.n:2d} {p.E_n:8.4f} {e.real:6.2f} {p.half_width:7.4f} {-e.imag:6.2f} "
                  f"{p.epsilon:8.4f} {eps:6.2f} {d_peak:8.4f}")
    print(f"\nworst pole deviation {worst_pole:.4f} (tolerance {POLE_TOL}), "
          f"worst peak deviation {worst_peak:.4f} (tolerance {PEAK_TOL})")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
