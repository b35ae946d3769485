"""Where does G(n, p) start to admit an RMC_k-coloring?

Existence is equivalent to k edge-disjoint spanning trees, so the sweep only
asks the packing oracle.  The grid is kept small so the script runs in under
a minute; the acceptance suite uses n = 200 and 200 trials per point.

    python demos/random_threshold.py [n] [trials]
"""

import sys

from rmck.randomlab import check_stp_formula, geometric_grid, predicted_threshold, Regime, sweep

n = int(sys.argv[1]) if len(sys.argv) > 1 else 60
trials = int(sys.argv[2]) if len(sys.argv) > 2 else 40

print(f"packing number equals min(min degree, floor(m/(n-1))) in "
      f"{check_stp_formula(n, 0.3, trials, seed=1):.0%} of G({n}, 0.3) samples")

for k in (1, 2):
    p_star, _ = predicted_threshold(n, k, Regime("sublinear-log"))
    rep = sweep(n, k, geometric_grid(p_star / 4, 4 * p_star, 8), trials, seed=k)
    print(f"k={k}: predicted p*={p_star:.4f}, measured 50% crossing "
          f"{'none' if rep.crossing is None else f'{rep.crossing:.4f}'}")
    for p, f in zip(rep.grid, rep.frequencies):
        print(f"  p={p:.4f}  {'#' * round(40 * f):<40} {f:.2f}")
