"""Tabulate the remainder kernel in both forms next to minus the Dirichlet kernel.

Pointwise, away from the diagonal, the composed kernel coincides with
-dirichlet_kernel; the table makes that visible.

    python3 scripts/kernel_table.py [--quadrature-n 8192]
"""
import argparse

import numpy as np

from compact_hilbert.dirichlet import dirichlet_kernel, kernel_dr_double, kernel_dr_reduced


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--quadrature-n", type=int, default=8192)
    p.add_argument("--N", default="1,2,4,8")
    args = p.parse_args()
    q = args.quadrature_n
    print(f"{'N':>3} {'delta':>8} {'double':>14} {'reduced':>14} {'-dirichlet':>14} {'|d-r|':>9}")
    for N in (int(x) for x in args.N.split(",")):
        for delta in (np.pi / 4, np.pi / 2, 3 * np.pi / 4, np.pi):
            d = kernel_dr_double(N, delta, 0.0, q)
            r = kernel_dr_reduced(N, delta, q)
            print(f"{N:>3} {delta:>8.5f} {d:>14.10f} {r:>14.10f} "
                  f"{-dirichlet_kernel(N, delta):>14.10f} {abs(d - r):>9.1e}")


if __name__ == "__main__":
    main()
