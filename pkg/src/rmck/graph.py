"""Loopless multigraphs, vertex partitions, generators and structural metrics.

Vertices are the dense integers ``0..n-1``.  Edges live in a tuple in
insertion order; their position is the index used by every algorithm in
the package, while ``edge_ids`` carries a stable label per edge (equal to
the position unless a constructor such as the normalizer assigns fresh
labels).
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Malformed graph or partition input."""


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    edge_ids: tuple[int, ...] = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.n < 0:
            raise GraphError("vertex count must be non-negative")
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
        if self.edge_ids is None:
            object.__setattr__(self, "edge_ids", tuple(range(len(edges))))
        else:
            ids = tuple(int(i) for i in self.edge_ids)
            if len(ids) != len(edges) or len(set(ids)) != len(ids):
                raise GraphError("edge_ids must be distinct and one per edge")
            object.__setattr__(self, "edge_ids", ids)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex, the ``(neighbor, edge index)`` pairs in edge order."""
        inc: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append((v, i))
            inc[v].append((u, i))
        return tuple(tuple(x) for x in inc)

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(w for w, _ in self.incidence[v]) for v in range(self.n))

    @cached_property
    def _index_of_id(self) -> dict[int, int]:
        return {eid: i for i, eid in enumerate(self.edge_ids)}

    def index_of(self, edge_id: int) -> int:
        return self._index_of_id[edge_id]

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def degrees(self) -> list[int]:
        return [len(x) for x in self.incidence]

    def is_simple(self) -> bool:
        seen = set()
        for u, v in self.edges:
            key = (u, v) if u < v else (v, u)
            if key in seen:
                return False
            seen.add(key)
        return True

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, queue = [s], deque([s])
            while queue:
                x = queue.popleft()
                for y, _ in self.incidence[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        queue.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def simple_pairs(self) -> set[tuple[int, int]]:
        return {(u, v) if u < v else (v, u) for u, v in self.edges}

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def from_pairs(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    return Graph(n, tuple(pairs))


@dataclass(frozen=True)
class VertexPartition:
    blocks: tuple[frozenset[int], ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(frozenset(b) for b in self.blocks))

    @classmethod
    def singletons(cls, n: int) -> "VertexPartition":
        return cls(tuple(frozenset([v]) for v in range(n)))

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "VertexPartition":
        groups: dict[int, list[int]] = {}
        for v, lab in enumerate(labels):
            groups.setdefault(lab, []).append(v)
        return cls(tuple(frozenset(g) for g in groups.values()))

    def __len__(self) -> int:
        return len(self.blocks)

    def validate(self, n: int) -> None:
        if not self.blocks:
            raise GraphError("partition has no blocks")
        seen: set[int] = set()
        for b in self.blocks:
            if not b:
                raise GraphError("partition has an empty block")
            if seen & b:
                raise GraphError("partition blocks overlap")
            seen |= b
        if seen != set(range(n)):
            raise GraphError("partition blocks do not cover the vertex set")

    def labels(self, n: int) -> list[int]:
        self.validate(n)
        lab = [0] * n
        for i, b in enumerate(self.blocks):
            for v in b:
                lab[v] = i
        return lab

    def as_lists(self) -> list[list[int]]:
        return sorted(sorted(b) for b in self.blocks)


# ---------------------------------------------------------------- generators


def gen_complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph(n, tuple(combinations(range(n), 2)))


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a simple cycle needs n >= 3")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def gen_path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def gen_complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise GraphError("both sides need at least one vertex")
    return Graph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))


def gen_petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, tuple(outer + spokes + inner))


def glue(g: Graph, h: Graph, shared: int = 1) -> Graph:
    """Disjoint union of ``g`` and ``h`` with the last ``shared`` vertices of
    ``g`` identified with the first ``shared`` vertices of ``h``."""
    if shared < 0 or shared > min(g.n, h.n):
        raise GraphError("cannot identify that many vertices")
    offset = g.n - shared

    def relabel(x: int) -> int:
        return offset + x

    edges = list(g.edges) + [(relabel(u), relabel(v)) for u, v in h.edges]
    return Graph(g.n + h.n - shared, tuple(edges))


@dataclass(frozen=True)
class PerfectLayout:
    """Vertex and edge bookkeeping of a perfectly-connected graph."""

    k: int
    hub: int
    blocks: tuple[tuple[int, ...], ...]
    part_edge_ranges: tuple[range, ...]
    hub_edges: tuple[tuple[int, ...], ...]  # hub_edges[i][j]: index of hub -> j-th neighbor in part i


def perfectly_connected_layout(k: int, parts: Sequence[Graph]) -> tuple[Graph, PerfectLayout]:
    from .packing import tau_at_least

    s = len(parts)
    if s < 2:
        raise GraphError("need at least two parts")
    if k < 1:
        raise GraphError("k must be positive")
    for i, h in enumerate(parts):
        if h.n < k:
            raise GraphError(f"part {i} has {h.n} vertices, fewer than k={k}")
        if h.n == 1:
            continue  # vacuous packing; only reachable with k == 1
        if not tau_at_least(h, k):
            raise GraphError(f"part {i} does not contain {k} edge-disjoint spanning trees")
    hub = 0
    blocks = []
    offset = 1
    for h in parts:
        blocks.append(tuple(range(offset, offset + h.n)))
        offset += h.n
    edges: list[tuple[int, int]] = []
    ranges = []
    for h, block in zip(parts, blocks):
        start = len(edges)
        edges.extend((block[u], block[v]) for u, v in h.edges)
        ranges.append(range(start, len(edges)))
    for i, j in combinations(range(s), 2):
        edges.extend((x, y) for x in blocks[i] for y in blocks[j])
    hub_edges = []
    for block in blocks:
        row = []
        for j in range(k):
            row.append(len(edges))
            edges.append((hub, block[j]))
        hub_edges.append(tuple(row))
    g = Graph(offset, tuple(edges))
    return g, PerfectLayout(k, hub, tuple(blocks), tuple(ranges), tuple(hub_edges))


def gen_perfectly_connected(k: int, s: int, part_generators: Sequence[Graph]) -> Graph:
    """Hub vertex 0 with exactly ``k`` neighbors in each part; parts are
    copied from ``part_generators`` and joined completely to each other."""
    if s != len(part_generators):
        raise GraphError(f"s={s} but {len(part_generators)} parts given")
    return perfectly_connected_layout(k, part_generators)[0]


# ---------------------------------------------------------------- shrinking


def shrink(g: Graph, p: VertexPartition) -> Graph:
    """Contract every block to one vertex; intra-block edges vanish and
    cross edges survive with multiplicity (and their edge ids)."""
    labels = p.labels(g.n)
    order = {}
    for b in sorted(p.blocks, key=min):
        order[labels[min(b)]] = len(order)
    edges, ids = [], []
    for (u, v), eid in zip(g.edges, g.edge_ids):
        a, b = order[labels[u]], order[labels[v]]
        if a != b:
            edges.append((a, b))
            ids.append(eid)
    return Graph(len(p.blocks), tuple(edges), tuple(ids))


def edges_inside(g: Graph, p: VertexPartition) -> int:
    labels = p.labels(g.n)
    return sum(1 for u, v in g.edges if labels[u] == labels[v])


# ---------------------------------------------------------------- metrics


@dataclass(frozen=True)
class GraphMetrics:
    n: int
    m: int
    min_degree: int
    max_degree: int
    diameter: float
    cut_vertices: frozenset[int]
    edge_connectivity: int
    vertex_connectivity: int
    triangle_free: bool
    n_G: int

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "min_degree": self.min_degree,
            "max_degree": self.max_degree,
            "diameter": None if math.isinf(self.diameter) else int(self.diameter),
            "cut_vertices": sorted(self.cut_vertices),
            "edge_connectivity": self.edge_connectivity,
            "vertex_connectivity": self.vertex_connectivity,
            "triangle_free": self.triangle_free,
            "n_G": self.n_G,
        }


def bfs_distances(g: Graph, s: int) -> list[float]:
    dist = [math.inf] * g.n
    dist[s] = 0
    queue = deque([s])
    while queue:
        x = queue.popleft()
        for y in g.neighbor_sets[x]:
            if dist[y] == math.inf:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def diameter(g: Graph) -> float:
    if g.n <= 1:
        return 0
    return max(max(bfs_distances(g, s)) for s in range(g.n))


def cut_vertices(g: Graph) -> frozenset[int]:
    """Articulation points (iterative Hopcroft-Tarjan lowpoint search)."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    cuts: set[int] = set()
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        children = 0
        stack = [(root, -1, iter(g.incidence[root]))]
        while stack:
            x, parent_edge, it = stack[-1]
            advanced = False
            for y, e in it:
                if e == parent_edge:
                    continue
                if disc[y] == -1:
                    disc[y] = low[y] = timer
                    timer += 1
                    if x == root:
                        children += 1
                    stack.append((y, e, iter(g.incidence[y])))
                    advanced = True
                    break
                low[x] = min(low[x], disc[y])
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[x])
                if p != root and low[x] >= disc[p]:
                    cuts.add(p)
        if children > 1:
            cuts.add(root)
    return frozenset(cuts)


def _max_flow_unit(n: int, arcs: list[tuple[int, int, int]], s: int, t: int, cap_limit: int | None = None) -> int:
    """Edmonds-Karp on a small integer-capacity digraph."""
    graph: list[dict[int, int]] = [dict() for _ in range(n)]
    for a, b, c in arcs:
        graph[a][b] = graph[a].get(b, 0) + c
        graph[b].setdefault(a, 0)
    flow = 0
    while cap_limit is None or flow < cap_limit:
        parent = {s: s}
        queue = deque([s])
        while queue and t not in parent:
            x = queue.popleft()
            for y, c in graph[x].items():
                if c > 0 and y not in parent:
                    parent[y] = x
                    queue.append(y)
        if t not in parent:
            break
        y = t
        while y != s:
            x = parent[y]
            graph[x][y] -= 1
            graph[y][x] += 1
            y = x
        flow += 1
    return flow


def local_edge_connectivity(g: Graph, s: int, t: int) -> int:
    arcs = []
    for u, v in g.edges:
        arcs.append((u, v, 1))
        arcs.append((v, u, 1))
    return _max_flow_unit(g.n, arcs, s, t)


def edge_connectivity(g: Graph) -> int:
    if g.n <= 1 or not g.is_connected():
        return 0
    best = min(g.degrees())
    for t in range(1, g.n):
        best = min(best, local_edge_connectivity(g, 0, t))
    return best


def vertex_connectivity(g: Graph) -> int:
    """Simple-graph vertex connectivity; ``n-1`` for complete graphs."""
    n = g.n
    if n <= 1:
        return 0
    if not g.is_connected():
        return 0
    nbrs = g.neighbor_sets
    best = n - 1
    for s, t in combinations(range(n), 2):
        if t in nbrs[s]:
            continue
        # split x into x_in = x, x_out = x + n with unit capacity
        arcs = [(x, x + n, 1) for x in range(n) if x not in (s, t)]
        for u, v in g.simple_pairs():
            for a, b in ((u, v), (v, u)):
                src = a if a in (s, t) else a + n
                arcs.append((src, b, 1))
        best = min(best, _max_flow_unit(2 * n, arcs, s, t, cap_limit=best))
    return best


def is_triangle_free(g: Graph) -> bool:
    nbrs = g.neighbor_sets
    return not any(nbrs[u] & nbrs[v] for u, v in g.edges)


def common_neighbor_min(g: Graph) -> int:
    if g.n < 2:
        return 0
    nbrs = g.neighbor_sets
    return min(len(nbrs[u] & nbrs[v]) for u, v in combinations(range(g.n), 2))


def metrics(g: Graph) -> GraphMetrics:
    degs = g.degrees() or [0]
    return GraphMetrics(
        n=g.n,
        m=g.m,
        min_degree=min(degs),
        max_degree=max(degs),
        diameter=diameter(g),
        cut_vertices=cut_vertices(g),
        edge_connectivity=edge_connectivity(g),
        vertex_connectivity=vertex_connectivity(g),
        triangle_free=is_triangle_free(g),
        n_G=common_neighbor_min(g),
    )


def complement(g: Graph) -> Graph:
    pairs = g.simple_pairs()
    return Graph(g.n, tuple(p for p in combinations(range(g.n), 2) if p not in pairs))
