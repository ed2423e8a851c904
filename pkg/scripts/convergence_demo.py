"""Remainder decay for the catalog's non-smooth functions.

Prints sup |R_N| over a few angles for growing N, next to the tail-sum value
at pi/2, and the sweep's verdict.

    python3 scripts/convergence_demo.py [--n 4096] [--N 8,16,32,64]
"""
import argparse

import numpy as np

from compact_hilbert.catalog import get_entry, tail_sum_oracle
from compact_hilbert.dirichlet import convergence_sweep
from compact_hilbert.grid import make_grid, project_zero_average, sample


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n", type=int, default=4096)
    p.add_argument("--N", default="8,16,32,64")
    p.add_argument("--functions", default="sawtooth,square,logcos")
    args = p.parse_args()
    Ns = [int(x) for x in args.N.split(",")]
    thetas = [np.pi / 2, 1.0, -2.0]
    grid = make_grid(args.n)
    for name in args.functions.split(","):
        entry = get_entry(name)
        f = project_zero_average(sample(entry.f, grid))
        rep = convergence_sweep(f, Ns, thetas)
        print(f"{name}  (n={args.n}, angles={', '.join(f'{t:.4f}' for t in thetas)})")
        for i, N in enumerate(Ns):
            tail = tail_sum_oracle(entry, N, np.pi / 2, terms=max(10 ** 5, 10 * N))
            print(f"  N={N:<4} sup|R_N|={rep.sup_per_N[i]:.6f}  "
                  f"|R_N(pi/2)|={rep.remainders[i, 0]:.6f}  tail-sum={abs(tail):.6f}")
        print(f"  verdict: {rep.verdict}\n")


if __name__ == "__main__":
    main()
