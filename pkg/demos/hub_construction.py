"""A hub joined to s dense parts beats the k-tree baseline by s - 1 colors.

Normalizing the resulting coloring then merges crossing classes until the
classes are laminar; at least k of them end up as spanning trees.

    python demos/hub_construction.py
"""

from rmck.coloring import baseline_coloring, is_rmc_k, perfectly_connected_coloring
from rmck.graph import gen_complete, gen_perfectly_connected
from rmck.normalizer import normalize

for k, s in [(1, 3), (2, 2), (2, 3)]:
    parts = [gen_complete(2 * k + 1)] * s
    g = gen_perfectly_connected(k, s, parts)
    hub = perfectly_connected_coloring(g, k, parts)
    base = baseline_coloring(g, k)
    assert is_rmc_k(g, hub, k) and is_rmc_k(g, base, k)
    print(f"k={k} s={s}: n={g.n} m={g.m}  baseline {base.num_colors}  hub construction {hub.num_colors}")
    trace = normalize(g, hub, k, check=True)
    print(f"  normalized in {len(trace.steps)} merges, spanning-tree classes {trace.spanning_classes}")
