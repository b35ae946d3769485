"""Spanning-tree packing, the strength tau(G), and Nash-Williams-Tutte certificates.

``spanning_tree_packing`` grows ``k`` forests by matroid-union augmentation:
every edge, taken in ascending index order, starts a breadth-first search in
the exchange graph (edge ``f`` points to the edges of the cycle it closes in a
forest it is not in).  Reaching an edge that some forest accepts without a
cycle yields an augmenting sequence of swaps.  A failed search saturates the
set of labelled edges: every forest spans each connected piece of it, so the
pieces ("clumps") can be skipped from then on and, at the end, they form the
vertex partition certifying that no larger packing exists.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .graph import Graph, GraphError, VertexPartition, shrink


class DisconnectedGraphError(GraphError):
    pass


class BudgetExceededError(RuntimeError):
    pass


class _DSU:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if ra < rb:
                self.parent[rb] = ra
            else:
                self.parent[ra] = rb


@dataclass
class ForestPacking:
    """Raw outcome of the augmentation: forests as edge-index lists."""

    k: int
    forests: list[list[int]]
    complete: bool
    partition: Optional[VertexPartition]  # clump partition when incomplete


class _Forest:
    """One forest of the packing: adjacency, component DSU and a lazily
    rebuilt rooting used to read off tree paths."""

    def __init__(self, n: int):
        self.adj: list[dict[int, int]] = [dict() for _ in range(n)]
        self.dsu = _DSU(n)
        self.parent = [-1] * n
        self.parent_edge = [-1] * n
        self.depth = [0] * n
        self.dirty = False

    def _reroot(self) -> None:
        n = len(self.adj)
        parent, parent_edge, depth = self.parent, self.parent_edge, self.depth
        seen = [False] * n
        for r in range(n):
            if seen[r]:
                continue
            seen[r] = True
            parent[r], parent_edge[r], depth[r] = -1, -1, 0
            stack = [r]
            while stack:
                x = stack.pop()
                for y, e in self.adj[x].items():
                    if not seen[y]:
                        seen[y] = True
                        parent[y], parent_edge[y], depth[y] = x, e, depth[x] + 1
                        stack.append(y)
        self.dirty = False

    def path(self, a: int, b: int) -> list[int]:
        """Edge indices of the tree path between ``a`` and ``b`` (same component)."""
        if self.dirty:
            self._reroot()
        parent, parent_edge, depth = self.parent, self.parent_edge, self.depth
        out = []
        while depth[a] > depth[b]:
            out.append(parent_edge[a])
            a = parent[a]
        while depth[b] > depth[a]:
            out.append(parent_edge[b])
            b = parent[b]
        while a != b:
            out.append(parent_edge[a])
            out.append(parent_edge[b])
            a, b = parent[a], parent[b]
        return out


def pack_forests(g: Graph, k: int) -> ForestPacking:
    n, edges = g.n, g.edges
    target = k * (n - 1)
    owner = [-1] * g.m
    forests = [_Forest(n) for _ in range(k)]
    clumps = _DSU(n)
    size = 0

    def accepting(e: int) -> int:
        u, v = edges[e]
        for i, F in enumerate(forests):
            if i != owner[e] and F.dsu.find(u) != F.dsu.find(v):
                return i
        return -1

    def move(e: int, i: int) -> None:
        u, v = edges[e]
        j = owner[e]
        if j >= 0:
            F = forests[j]
            del F.adj[u][v]
            del F.adj[v][u]
            F.dirty = True
        F = forests[i]
        F.adj[u][v] = e
        F.adj[v][u] = e
        F.dirty = True
        owner[e] = i

    for e0 in range(g.m):
        if size == target:
            break
        u0, v0 = edges[e0]
        if clumps.find(u0) == clumps.find(v0):
            continue
        parent: dict[int, tuple[int, int]] = {e0: (-1, -1)}
        found = None
        i = accepting(e0)
        if i >= 0:
            found = (e0, i)
        queue = deque([e0])
        while queue and found is None:
            f = queue.popleft()
            fu, fv = edges[f]
            for i, F in enumerate(forests):
                if owner[f] == i:
                    continue
                for h in F.path(fu, fv):
                    if h in parent:
                        continue
                    hu, hv = edges[h]
                    if clumps.find(hu) == clumps.find(hv):
                        continue
                    parent[h] = (f, i)
                    j = accepting(h)
                    if j >= 0:
                        found = (h, j)
                        break
                    queue.append(h)
                if found is not None:
                    break
        if found is None:
            for h in parent:
                hu, hv = edges[h]
                clumps.union(hu, hv)
            continue
        f, i = found
        # the final insertion joins two components of forest i; swaps
        # along the chain leave every other forest's components unchanged
        fu, fv = edges[f]
        forests[i].dsu.union(fu, fv)
        while f != -1:
            prev, j = parent[f]
            move(f, i)
            f, i = prev, j
        size += 1

    out: list[list[int]] = [[] for _ in range(k)]
    for e, i in enumerate(owner):
        if i >= 0:
            out[i].append(e)
    complete = size == target
    partition = None
    if not complete:
        partition = VertexPartition.from_labels([clumps.find(v) for v in range(n)])
    return ForestPacking(k, out, complete, partition)


def _require_connected(g: Graph) -> None:
    if g.n < 1:
        raise GraphError("empty graph")
    if not g.is_connected():
        raise DisconnectedGraphError("graph is not connected")


@dataclass(frozen=True)
class PackingOutcome:
    """Either ``k`` edge-disjoint spanning trees (edge ids) or a violating
    partition with ``e(G/P) < k(|P|-1)``."""

    k: int
    trees: Optional[tuple[tuple[int, ...], ...]]
    witness: Optional[VertexPartition]

    def __bool__(self) -> bool:
        return self.trees is not None


def spanning_tree_packing(g: Graph, k: int) -> PackingOutcome:
    if k < 1:
        raise ValueError("k must be >= 1")
    _require_connected(g)
    if g.n == 1:
        return PackingOutcome(k, tuple(() for _ in range(k)), None)
    fp = pack_forests(g, k)
    if fp.complete:
        trees = tuple(tuple(g.edge_ids[e] for e in forest) for forest in fp.forests)
        return PackingOutcome(k, trees, None)
    return PackingOutcome(k, None, fp.partition)


def tau_at_least(g: Graph, k: int) -> bool:
    return bool(spanning_tree_packing(g, k))


def partition_ratio(g: Graph, p: VertexPartition) -> Fraction:
    if len(p) < 2:
        raise GraphError("ratio needs at least two blocks")
    return Fraction(shrink(g, p).m, len(p) - 1)


def stp_number(g: Graph) -> int:
    """Maximum number of pairwise edge-disjoint spanning trees."""
    return _stp_with_trees(g)[0]


def _stp_with_trees(g: Graph) -> tuple[int, Optional[list[list[int]]]]:
    _require_connected(g)
    if g.n == 1:
        raise GraphError("spanning-tree packing needs n >= 2")
    k = min(min(g.degrees()), g.m // (g.n - 1))
    while k >= 1:
        fp = pack_forests(g, k)
        if fp.complete:
            return k, fp.forests
        # the clump partition caps the strength below k
        bound = partition_ratio(g, fp.partition)
        k = min(k - 1, bound.numerator // bound.denominator)
    return 0, None


def verify_nwt_certificate(g: Graph, k: int, p: VertexPartition) -> bool:
    """True iff ``p`` shows that ``g`` has no ``k`` edge-disjoint spanning trees."""
    p.validate(g.n)
    return shrink(g, p).m < k * (len(p) - 1)


def tau_exact(g: Graph, budget: int = 12) -> tuple[Fraction, VertexPartition]:
    """Exact ``min e(G/P)/(|P|-1)`` over partitions with at least two blocks.

    Enumerates restricted-growth strings with a ratio bound; ties keep the
    first minimizer found.
    """
    _require_connected(g)
    n = g.n
    if n < 2:
        raise GraphError("tau needs n >= 2")
    if n > budget:
        raise BudgetExceededError(f"n={n} exceeds the partition-enumeration budget {budget}")
    back: list[list[int]] = [[] for _ in range(n)]  # back[v]: lower endpoints, with multiplicity
    for u, v in g.edges:
        a, b = (u, v) if u < v else (v, u)
        back[b].append(a)

    label = [0] * n
    best = [g.m, 1, None]  # numerator, denominator (singletons is the start), labels

    # singleton partition is always a candidate
    best[0], best[1], best[2] = g.m, n - 1, list(range(n))

    def rec(v: int, blocks: int, cross: int) -> None:
        remaining = n - v
        # cross only grows; blocks at most blocks + remaining
        max_blocks = blocks + remaining
        if max_blocks >= 2 and cross * best[1] >= best[0] * (max_blocks - 1):
            return
        if v == n:
            if blocks >= 2 and cross * best[1] < best[0] * (blocks - 1):
                best[0], best[1], best[2] = cross, blocks - 1, label[:]
            return
        for b in range(blocks + 1):
            label[v] = b
            added = 0
            for a in back[v]:
                if label[a] != b:
                    added += 1
            rec(v + 1, blocks + (b == blocks), cross + added)

    label[0] = 0
    rec(1, 1, 0)
    return Fraction(best[0], best[1]), VertexPartition.from_labels(best[2])


@dataclass(frozen=True)
class PackingResult:
    t_number: int
    trees: tuple[tuple[int, ...], ...]
    tau: Optional[Fraction]
    tau_witness: Optional[VertexPartition]

    @property
    def tau_num(self) -> Optional[int]:
        return None if self.tau is None else self.tau.numerator

    @property
    def tau_den(self) -> Optional[int]:
        return None if self.tau is None else self.tau.denominator

    def to_dict(self) -> dict:
        return {
            "tau": None if self.tau is None else f"{self.tau.numerator}/{self.tau.denominator}",
            "T": self.t_number,
            "trees": [list(t) for t in self.trees],
            "witness_partition": None if self.tau_witness is None else self.tau_witness.as_lists(),
        }


def packing(g: Graph, budget: int = 12) -> PackingResult:
    """T(G) with witness trees, plus exact tau when ``n <= budget``."""
    t, forests = _stp_with_trees(g)
    trees = tuple(tuple(g.edge_ids[e] for e in f) for f in (forests or []))
    tau = witness = None
    if g.n <= budget:
        tau, witness = tau_exact(g, budget)
        assert tau.numerator // tau.denominator == t, "packing number disagrees with floor(tau)"
    return PackingResult(t, trees, tau, witness)
