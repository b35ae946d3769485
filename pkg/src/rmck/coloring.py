"""Edge colorings, the RMC_k verifier, color-class accounting and constructive colorings.

Verifier reduction: ``u`` and ``v`` are joined by ``k`` rainbow monochromatic
paths iff at least ``k`` distinct colors have ``u`` and ``v`` in one component
of their class.  Paths of pairwise distinct colors never share an edge (each
edge carries one color) and a single color contributes at most one path to a
rainbow family, so counting connecting colors is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

import numpy as np

from .graph import Graph, GraphError, perfectly_connected_layout
from .packing import VertexPartition, spanning_tree_packing


class ColoringError(ValueError):
    pass


class NoPackingError(ColoringError):
    """Raised when ``k`` edge-disjoint spanning trees do not exist."""

    def __init__(self, k: int, witness: VertexPartition):
        super().__init__(
            f"tau(G) >= {k} fails: partition {witness.as_lists()} has fewer than "
            f"{k}(|P|-1) crossing edges, so no RMC_{k}-coloring exists"
        )
        self.k = k
        self.witness = witness


@dataclass(frozen=True)
class EdgeColoring:
    """``colors[i]`` is the color of the edge at position ``i``."""

    colors: tuple[int, ...]

    def __post_init__(self):
        cols = tuple(int(c) for c in self.colors)
        if any(c < 1 for c in cols):
            raise ColoringError("color labels must be positive integers")
        object.__setattr__(self, "colors", cols)

    @classmethod
    def from_mapping(cls, g: Graph, mapping: Mapping[int, int]) -> "EdgeColoring":
        missing = [eid for eid in g.edge_ids if eid not in mapping]
        if missing:
            raise ColoringError(f"uncolored edges {missing}")
        return cls(tuple(mapping[eid] for eid in g.edge_ids))

    def assignment(self, g: Graph) -> dict[int, int]:
        return dict(zip(g.edge_ids, self.colors))

    def canonical(self) -> "EdgeColoring":
        relabel: dict[int, int] = {}
        for c in self.colors:
            relabel.setdefault(c, len(relabel) + 1)
        return EdgeColoring(tuple(relabel[c] for c in self.colors))

    @property
    def num_colors(self) -> int:
        return len(set(self.colors))

    def check(self, g: Graph) -> None:
        if len(self.colors) != g.m:
            raise ColoringError(f"coloring has {len(self.colors)} entries for {g.m} edges")


def _class_edges(c: EdgeColoring) -> dict[int, list[int]]:
    out: dict[int, list[int]] = {}
    for i, col in enumerate(c.colors):
        out.setdefault(col, []).append(i)
    return out


def _components(g: Graph, edge_idx: Sequence[int]) -> list[list[int]]:
    parent: dict[int, int] = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in edge_idx:
        u, v = g.edges[i]
        parent.setdefault(u, u)
        parent.setdefault(v, v)
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    groups: dict[int, list[int]] = {}
    for x in parent:
        groups.setdefault(find(x), []).append(x)
    return sorted((sorted(gr) for gr in groups.values()), key=lambda s: s[0])


@dataclass(frozen=True)
class ColorClass:
    color: int
    edges: tuple[int, ...]  # edge ids
    vertices: frozenset[int]
    components: int

    @property
    def is_tree(self) -> bool:
        return self.components == 1 and len(self.edges) == len(self.vertices) - 1

    @property
    def is_trivial(self) -> bool:
        return len(self.edges) == 1


@dataclass(frozen=True)
class ColorClassSummary:
    classes: dict[int, ColorClass]
    m: int
    nontrivial_color_degree: tuple[int, ...]

    @property
    def colors_used(self) -> int:
        return len(self.classes)

    @property
    def waste(self) -> int:
        return self.m - self.colors_used

    @property
    def all_trees(self) -> bool:
        return all(cl.is_tree for cl in self.classes.values())


def color_classes(g: Graph, c: EdgeColoring) -> ColorClassSummary:
    c.check(g)
    classes = {}
    dn = [0] * g.n
    for col, idx in sorted(_class_edges(c).items()):
        verts = frozenset(x for i in idx for x in g.edges[i])
        classes[col] = ColorClass(
            col, tuple(g.edge_ids[i] for i in idx), verts, len(_components(g, idx))
        )
        if len(idx) > 1:
            for x in verts:
                dn[x] += 1
    return ColorClassSummary(classes, g.m, tuple(dn))


def coverage_matrix(g: Graph, c: EdgeColoring) -> np.ndarray:
    """``cov[u, v]`` = number of colors whose class joins ``u`` and ``v``."""
    c.check(g)
    cov = np.zeros((g.n, g.n), dtype=np.int64)
    for idx in _class_edges(c).values():
        for comp in _components(g, idx):
            ix = np.array(comp)
            cov[np.ix_(ix, ix)] += 1
    return cov


def pair_coverage(g: Graph, c: EdgeColoring, u: int, v: int) -> int:
    if u == v:
        raise ValueError("pair coverage needs two distinct vertices")
    c.check(g)
    count = 0
    for idx in _class_edges(c).values():
        for comp in _components(g, idx):
            if u in comp and v in comp:
                count += 1
                break
    return count


@dataclass(frozen=True)
class RMCCheck:
    ok: bool
    failing_pair: Optional[tuple[int, int]]
    coverage: Optional[int]

    def __bool__(self) -> bool:
        return self.ok


def is_rmc_k(g: Graph, c: EdgeColoring, k: int) -> RMCCheck:
    if g.n < 2:
        return RMCCheck(True, None, None)
    cov = coverage_matrix(g, c)
    iu = np.triu_indices(g.n, 1)
    vals = cov[iu]
    worst = int(np.argmin(vals))
    if vals[worst] >= k:
        return RMCCheck(True, None, None)
    return RMCCheck(False, (int(iu[0][worst]), int(iu[1][worst])), int(vals[worst]))


def baseline_coloring(g: Graph, k: int) -> EdgeColoring:
    """``k`` edge-disjoint spanning trees colored ``1..k``; every other edge
    gets its own fresh color, for ``m - k(n-2)`` colors in total."""
    pack = spanning_tree_packing(g, k)
    if not pack:
        raise NoPackingError(k, pack.witness)
    colors = [0] * g.m
    for j, tree in enumerate(pack.trees, start=1):
        for eid in tree:
            colors[g.index_of(eid)] = j
    fresh = k
    for i in range(g.m):
        if colors[i] == 0:
            fresh += 1
            colors[i] = fresh
    return EdgeColoring(tuple(colors))


def perfectly_connected_coloring(g: Graph, k: int, parts: Sequence[Graph]) -> EdgeColoring:
    """Coloring of a perfectly-connected graph with ``m - k(n-2) + s - 1`` colors.

    Class ``i`` (one per part) is the first spanning tree of part ``i`` plus
    the hub's first edge into it; for ``j >= 2`` the ``j``-th trees of all
    parts and the hub's ``j``-th edges form one spanning tree of ``g``.
    """
    if not parts:
        raise ColoringError("construction data missing: no parts given")
    expected, layout = perfectly_connected_layout(k, parts)
    if expected.edges != g.edges:
        raise ColoringError("graph does not match the perfectly-connected construction for these parts")
    s = len(parts)
    colors = [0] * g.m
    for i, h in enumerate(parts):
        offset = layout.part_edge_ranges[i].start
        if h.n > 1:
            trees = spanning_tree_packing(h, k).trees
            for j, tree in enumerate(trees):
                color = i + 1 if j == 0 else s + j
                for eid in tree:
                    colors[offset + h.index_of(eid)] = color
        for j, e in enumerate(layout.hub_edges[i]):
            colors[e] = i + 1 if j == 0 else s + j
    fresh = s + k - 1
    for e in range(g.m):
        if colors[e] == 0:
            fresh += 1
            colors[e] = fresh
    return EdgeColoring(tuple(colors))


def improve_coloring(g: Graph, c: EdgeColoring, k: int) -> EdgeColoring:
    """Split disconnected classes and break class cycles until every class is a tree.

    Colors are processed in ascending label; the component holding the
    smallest vertex keeps its label, the rest get fresh labels in order of
    their smallest vertex.  A cycle is broken at its highest edge index.
    """
    if not is_rmc_k(g, c, k):
        raise ColoringError(f"input is not an RMC_{k}-coloring")
    colors = list(c.colors)
    fresh = max(colors, default=0)
    for col, idx in sorted(_class_edges(c).items()):
        comps = _components(g, idx)
        where = {}
        for ci, comp in enumerate(comps):
            for x in comp:
                where[x] = ci
        comp_edges: list[list[int]] = [[] for _ in comps]
        for i in idx:
            comp_edges[where[g.edges[i][0]]].append(i)
        for ci, es in enumerate(comp_edges):
            label = col
            if ci > 0:
                fresh += 1
                label = fresh
                for i in es:
                    colors[i] = label
            # cycle breaking inside this component
            parent: dict[int, int] = {}

            def find(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            for i in sorted(es):
                u, v = g.edges[i]
                parent.setdefault(u, u)
                parent.setdefault(v, v)
                ru, rv = find(u), find(v)
                if ru == rv:
                    fresh += 1
                    colors[i] = fresh
                else:
                    parent[ru] = rv
    return EdgeColoring(tuple(colors))


def nontrivial_color_degree_check(g: Graph, c: EdgeColoring, k: int) -> bool:
    """Every vertex meets at least ``k`` nontrivial colors (necessary for
    RMC_k with ``k >= 2`` on simple graphs)."""
    if k < 2:
        raise ValueError("the nontrivial color degree condition needs k >= 2")
    if not g.is_simple():
        raise GraphError("the nontrivial color degree condition needs a simple graph")
    return min(color_classes(g, c).nontrivial_color_degree, default=k) >= k
