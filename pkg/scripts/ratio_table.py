#!/usr/bin/env python3
"""Regenerate the uniform-row-sum ratio table: exact count, asymptotic
estimate, and their ratio for N = 6..8 (exact oracle range) plus the
asymptotic value alone further out.

Usage: python scripts/ratio_table.py [--max-n 12]
"""

import argparse
import math

from qmm.asymcount import asymptotic_count, lambda_star
from qmm.counting import InstanceTooLarge, RowSumSpec, count_row_sums

ROWS = [(6, 6), (7, 8), (8, 9), (9, 10), (10, 11), (11, 12), (12, 13)]


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-n", type=int, default=12)
    args = parser.parse_args()

    print(f"{'N':>3} {'t':>3} {'lambda':>7} {'exact':>12} {'asymptotic':>12} {'ratio':>7}")
    for n, t in ROWS:
        if n > args.max_n:
            break
        spec = RowSumSpec(n, (t,) * n)
        res = asymptotic_count(spec)
        asym = math.exp(res.value.log_abs)
        try:
            exact = count_row_sums(spec)
            ratio = asym / exact
            print(f"{n:>3} {t:>3} {lambda_star(spec):>7.2f} {exact:>12.3e} "
                  f"{asym:>12.3e} {ratio:>7.3f}")
        except InstanceTooLarge:
            print(f"{n:>3} {t:>3} {lambda_star(spec):>7.2f} {'-':>12} {asym:>12.3e} {'-':>7}")


if __name__ == "__main__":
    main()
