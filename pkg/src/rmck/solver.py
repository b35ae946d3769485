"""Exact rmc_k by branch and bound over partitions of the edge set into trees.

Any RMC_k-coloring can be turned into one whose classes are all trees
without losing colors (split disconnected classes, recolor a cycle edge),
so the optimum is a partition of E(G) into trees maximizing the number of
parts subject to every vertex pair lying in at least ``k`` parts.

Search: edges are ranked by descending endpoint degree sum.  At each node
the lowest-ranked undecided edge ``e`` is settled for good, either as a
trivial class or as the smallest edge of a whole subtree drawn from the
undecided edges; each partition is therefore produced once (classes are
implicitly ordered by their first edge).  A closed class never grows, so
future coverage of a pair can only come from undecided edges, which gives
the pruning rules:

* the pair's deficit cannot exceed the undecided degree of either endpoint,
  and both endpoints must share a component of the undecided edges;
* at a vertex ``v`` with total deficit ``D_v`` the future trees through
  ``v`` waste at least ``D_v - deg_U(v)`` colors (a tree on ``s`` vertices
  covers ``s-1`` pairs at ``v`` and wastes ``s-2``); summed over vertices and
  divided by the largest possible tree order this bounds the total waste;
* waste so far plus that bound must stay below the incumbent's waste.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional

from .coloring import EdgeColoring, NoPackingError, baseline_coloring, color_classes, is_rmc_k
from .graph import Graph, GraphError
from .packing import spanning_tree_packing


class SolverTimeout(Exception):
    pass


@dataclass
class SolveResult:
    k: int
    value: int
    coloring: EdgeColoring
    optimal: bool
    nodes: int
    elapsed: float
    report: Optional[object] = None  # BoundsReport when the budget ran out

    @property
    def exact(self) -> Optional[int]:
        return self.value if self.optimal else None


def _detach_leaves(g: Graph, c: EdgeColoring, k: int) -> EdgeColoring:
    """Greedy local search: peel leaf edges off nontrivial classes into fresh
    trivial colors while the coloring stays RMC_k."""
    colors = list(c.colors)
    improved = True
    while improved:
        improved = False
        fresh = max(colors) + 1
        summary = color_classes(g, EdgeColoring(tuple(colors)))
        for col, cl in sorted(summary.classes.items()):
            if len(cl.edges) < 2:
                continue
            idx = [g.index_of(e) for e in cl.edges]
            deg: dict[int, int] = {}
            for i in idx:
                for x in g.edges[i]:
                    deg[x] = deg.get(x, 0) + 1
            for i in sorted(idx):
                u, v = g.edges[i]
                if deg[u] != 1 and deg[v] != 1:
                    continue
                trial = colors.copy()
                trial[i] = fresh
                if is_rmc_k(g, EdgeColoring(tuple(trial)), k):
                    colors = trial
                    improved = True
                    break
            if improved:
                break
    return EdgeColoring(tuple(colors))


def greedy_coloring(g: Graph, k: int) -> EdgeColoring:
    """Baseline spanning-tree coloring improved by leaf detachment."""
    return _detach_leaves(g, baseline_coloring(g, k), k)


def mc_heuristic(g: Graph) -> EdgeColoring:
    """A valid MC-coloring (k = 1) from greedy tree growing plus leaf peeling.

    No optimality claim; the color count is whatever the greedy reaches.
    """
    if not g.is_connected():
        raise GraphError("graph is not connected")
    if g.n == 1:
        return EdgeColoring(tuple(range(1, g.m + 1)))
    return greedy_coloring(g, 1)


class _Search:
    def __init__(self, g: Graph, k: int, incumbent: EdgeColoring, deadline: Optional[float], node_limit: Optional[int]):
        self.g, self.k, self.n = g, k, g.n
        degs = g.degrees()
        self.order = sorted(range(g.m), key=lambda i: (-(degs[g.edges[i][0]] + degs[g.edges[i][1]]), i))
        self.ends = [g.edges[i] for i in self.order]
        self.inc = [0] * g.n
        self.nbrs: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
        for e, (u, v) in enumerate(self.ends):
            self.inc[u] |= 1 << e
            self.inc[v] |= 1 << e
            self.nbrs[u].append((e, v))
            self.nbrs[v].append((e, u))
        self.cov = [[0] * g.n for _ in range(g.n)]
        self.best_colors = incumbent.num_colors
        self.best_coloring = incumbent
        self.best_waste = g.m - self.best_colors
        self.deadline = deadline
        self.node_limit = node_limit
        self.nodes = 0
        self.chosen: list[int] = []

    # ------------------------------------------------------------ bounds

    def _lower_bound(self, U: int) -> int:
        """Lower bound on the waste still to come, or -1 if infeasible."""
        n, k, cov, inc = self.n, self.k, self.cov, self.inc
        degU = [(U & inc[v]).bit_count() for v in range(n)]
        deficit = [0] * n
        needy = []
        for u in range(n):
            row = cov[u]
            du = degU[u]
            for v in range(u + 1, n):
                d = k - row[v]
                if d > 0:
                    if d > du or d > degU[v]:
                        return -1
                    deficit[u] += d
                    deficit[v] += d
                    needy.append((u, v))
        if not needy:
            return 0
        # components of the undecided edges
        comp = list(range(n))

        def find(x):
            while comp[x] != x:
                comp[x] = comp[comp[x]]
                x = comp[x]
            return x

        rest = U
        while rest:
            low = rest & -rest
            e = low.bit_length() - 1
            rest ^= low
            a, b = self.ends[e]
            ra, rb = find(a), find(b)
            if ra != rb:
                comp[ra] = rb
        for u, v in needy:
            if find(u) != find(v):
                return -1
        sizes: dict[int, int] = {}
        for x in range(n):
            r = find(x)
            sizes[r] = sizes.get(r, 0) + 1
        largest = max(sizes.values())
        lb1 = 0
        total = 0
        for v in range(n):
            s = deficit[v] - degU[v]
            if s > 0:
                total += s
                if s > lb1:
                    lb1 = s
        lb2 = -(-total // largest)
        return max(lb1, lb2)

    # ------------------------------------------------------------ moves

    def _subtrees(self, e: int, U: int, cap: int):
        """Subtrees of the undecided edges that contain ``e`` and have
        2..cap edges, each produced once, as (edge mask, vertex list)."""
        u, v = self.ends[e]
        nbrs, ends = self.nbrs, self.ends
        vmask0 = (1 << u) | (1 << v)
        cand0 = []
        for x in (u, v):
            for d, y in nbrs[x]:
                if d != e and U >> d & 1 and not vmask0 >> y & 1:
                    cand0.append(d)
        cand0.sort()

        def rec(tmask, vmask, verts, size, cand, excluded):
            if size >= 2:
                yield tmask, verts
            if size >= cap:
                return
            for idx, c in enumerate(cand):
                a, b = ends[c]
                x = b if vmask >> a & 1 else a
                nv = vmask | (1 << x)
                newcand = []
                for d in cand[idx + 1:]:
                    da, db = ends[d]
                    if not (nv >> da & 1 and nv >> db & 1):
                        newcand.append(d)
                for d, y in nbrs[x]:
                    if U >> d & 1 and not excluded >> d & 1 and not nv >> y & 1:
                        newcand.append(d)
                yield from rec(tmask | (1 << c), nv, verts + [x], size + 1, newcand, excluded)
                excluded |= 1 << c

        return rec(1 << e, vmask0, [u, v], 1, cand0, 0)

    def _tick(self):
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise SolverTimeout
        if self.deadline is not None and self.nodes & 1023 == 0 and time.perf_counter() > self.deadline:
            raise SolverTimeout

    def run(self, U: int, waste: int) -> None:
        self._tick()
        if U == 0:
            if self._lower_bound(0) == 0 and self.g.m - waste > self.best_colors:
                self._record(waste)
            return
        lb = self._lower_bound(U)
        if lb < 0 or waste + lb >= self.best_waste:
            return
        low = U & -U
        e = low.bit_length() - 1
        cov = self.cov
        a, b = self.ends[e]
        if a > b:
            a, b = b, a
        # trivial class
        cov[a][b] += 1
        self.chosen.append(low)
        self.run(U ^ low, waste)
        self.chosen.pop()
        cov[a][b] -= 1
        # nontrivial class through e
        cap = self.best_waste - waste  # edges of a class cost edges-1 waste
        for tmask, verts in self._subtrees(e, U, cap):
            size = tmask.bit_count()
            if waste + size - 1 >= self.best_waste:
                continue
            vs = sorted(verts)
            for i, x in enumerate(vs):
                row = cov[x]
                for y in vs[i + 1:]:
                    row[y] += 1
            self.chosen.append(tmask)
            self.run(U & ~tmask, waste + size - 1)
            self.chosen.pop()
            for i, x in enumerate(vs):
                row = cov[x]
                for y in vs[i + 1:]:
                    row[y] -= 1

    def _record(self, waste: int) -> None:
        colors = [0] * self.g.m
        for label, mask in enumerate(self.chosen, start=1):
            rest = mask
            while rest:
                low = rest & -rest
                colors[self.order[low.bit_length() - 1]] = label
                rest ^= low
        self.best_coloring = EdgeColoring(tuple(colors))
        self.best_colors = self.g.m - waste
        self.best_waste = waste


def rmc_exact(
    g: Graph,
    k: int,
    budget_ms: Optional[float] = None,
    node_limit: Optional[int] = None,
    incumbent: Optional[EdgeColoring] = None,
) -> SolveResult:
    """Maximum number of colors of an RMC_k-coloring of a simple connected graph.

    When the time or node budget runs out the result is flagged not optimal
    and carries a bounds report whose lower bound is the incumbent.
    """
    from .bounds import Bound, bounds

    if not g.is_simple():
        raise GraphError("the exact solver expects a simple graph")
    if not g.is_connected():
        raise GraphError("graph is not connected")
    if g.n < 2:
        raise GraphError("need at least two vertices")
    pack = spanning_tree_packing(g, k)
    if not pack:
        raise NoPackingError(k, pack.witness)
    start = time.perf_counter()
    if incumbent is None:
        incumbent = greedy_coloring(g, k)
    elif not is_rmc_k(g, incumbent, k):
        raise ValueError("incumbent is not an RMC_k-coloring")
    deadline = None if budget_ms is None else start + budget_ms / 1000.0
    search = _Search(g, k, incumbent, deadline, node_limit)
    optimal = True
    try:
        search.run((1 << g.m) - 1, 0)
    except SolverTimeout:
        optimal = False
    elapsed = time.perf_counter() - start
    coloring = search.best_coloring.canonical()
    result = SolveResult(k, search.best_colors, coloring, optimal, search.nodes, elapsed)
    if not optimal:
        report = bounds(g, k)
        if report.lower is None or search.best_colors > report.lower.value:
            report.lower = Bound(search.best_colors, "incumbent")
        result.report = report
    return result
