"""Exact values, bounds and witnesses on a handful of familiar graphs.

    python demos/small_graphs.py
"""

from rmck import bounds, is_rmc_k, rmc_exact, stp_number
from rmck.graph import gen_complete, gen_complete_bipartite, gen_cycle, gen_petersen

GRAPHS = {
    "K4": gen_complete(4),
    "K5": gen_complete(5),
    "C5": gen_cycle(5),
    "K3,3": gen_complete_bipartite(3, 3),
    "Petersen": gen_petersen(),
}

for name, g in GRAPHS.items():
    tau = stp_number(g)
    print(f"{name}: n={g.n} m={g.m} spanning-tree packing number {tau}")
    for k in range(1, tau + 1):
        res = rmc_exact(g, k, budget_ms=20_000)
        rep = bounds(g, k)
        assert is_rmc_k(g, res.coloring, k)
        tag = "exact" if res.optimal else "best found"
        print(f"  k={k}: {tag} {res.value} colors ({res.nodes} nodes)"
              f"  lower {rep.lower.value}, upper {rep.min_upper}, class {rep.predicate or '-'}")
