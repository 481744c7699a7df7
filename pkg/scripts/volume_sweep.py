#!/usr/bin/env python3
"""Sweep data for diagonal subpolytope volumes: diagonal (c,...,c,x,1-x).

Emits CSV columns (x, exact, asymptotic, mc) per N; exact only where the
closed forms exist (N = 3, 4).  The MC column uses hit-and-miss up to
N = 6 and the row-peeling sampler beyond.

Usage: python scripts/volume_sweep.py --n 5 --points 17 --samples 200000
"""

import argparse
import math

from qmm.polytope import (
    DiagonalSpec,
    asymptotic_volume,
    exact_volume_n3,
    exact_volume_n4,
    mc_volume,
    mc_volume_peel,
)


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--n", type=int, default=5)
    parser.add_argument("--c", type=float, default=0.5, help="fixed diagonal value")
    parser.add_argument("--points", type=int, default=17)
    parser.add_argument("--samples", type=int, default=200_000)
    parser.add_argument("--seed", type=int, default=42)
    args = parser.parse_args()

    print("x,exact,asymptotic,mc,mc_se")
    for i in range(args.points):
        x = 0.25 + 0.5 * i / (args.points - 1)
        h = (args.c,) * (args.n - 2) + (x, 1.0 - x)
        spec = DiagonalSpec(args.n, h)
        exact = float("nan")
        if args.n == 3:
            exact = exact_volume_n3(spec)
        elif args.n == 4:
            exact = exact_volume_n4(spec)
        asym = math.exp(asymptotic_volume(spec).log_abs)
        if args.n <= 6:
            est, se = mc_volume(spec, args.samples, args.seed)
        else:
            est, se = mc_volume_peel(spec, args.samples, args.seed)
        print(f"{x:.6f},{exact:.6e},{asym:.6e},{est:.6e},{se:.2e}")


if __name__ == "__main__":
    main()
