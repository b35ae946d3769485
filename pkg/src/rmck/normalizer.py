"""Merge normalization of RMC_k colorings into spanning-tree form.

Two color classes *cross* when each has a vertex the other lacks and they
share a vertex.  A merge step deletes both classes and inserts two new
trees: one (keeping the first color) spanning the union of their vertex
sets, one (keeping the second color) spanning the intersection.  Vertex and
edge counts stay fixed, coverage never drops, and the descending sequence of
class orders strictly increases lexicographically, so repeated merging
terminates.  At the end at least ``k`` classes span the graph, which proves
``e(G) >= k(n-1)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .coloring import ColoringError, EdgeColoring, _class_edges, _components, is_rmc_k
from .graph import Graph


class NormalizationError(RuntimeError):
    """An invariant of the merge procedure broke (never expected)."""


def _class_vertices(g: Graph, c: EdgeColoring) -> dict[int, frozenset[int]]:
    out = {}
    for col, idx in sorted(_class_edges(c).items()):
        comps = _components(g, idx)
        if len(comps) != 1:
            raise ColoringError(f"color {col} induces a disconnected subgraph")
        out[col] = frozenset(comps[0])
    return out


def class_order_sequence(g: Graph, c: EdgeColoring) -> tuple[int, ...]:
    """Orders of the color-induced subgraphs, sorted descending."""
    verts: dict[int, set[int]] = {}
    for (u, v), col in zip(g.edges, c.colors):
        verts.setdefault(col, set()).update((u, v))
    return tuple(sorted((len(s) for s in verts.values()), reverse=True))


def find_crossing_pair(g: Graph, c: EdgeColoring) -> Optional[tuple[int, int]]:
    verts = _class_vertices(g, c)
    labels = sorted(verts)
    for a, i in enumerate(labels):
        vi = verts[i]
        for j in labels[a + 1:]:
            vj = verts[j]
            if vi & vj and vi - vj and vj - vi:
                return i, j
    return None


def _star(vertices: frozenset[int]) -> list[tuple[int, int]]:
    # BFS tree of the complete graph on the set, rooted at its minimum
    root = min(vertices)
    return [(root, x) for x in sorted(vertices) if x != root]


def merge_step(g: Graph, c: EdgeColoring, i: int, j: int) -> tuple[Graph, EdgeColoring]:
    c.check(g)
    verts = _class_vertices(g, c)
    if i not in verts or j not in verts:
        raise ColoringError(f"colors {i}, {j} are not both in use")
    vi, vj = verts[i], verts[j]
    if not (vi & vj and vi - vj and vj - vi):
        raise ColoringError(f"colors {i} and {j} do not cross")
    keep = [e for e, col in enumerate(c.colors) if col not in (i, j)]
    removed = g.m - len(keep)
    t1 = _star(vi | vj)
    t2 = _star(vi & vj)
    # cyclic classes carry surplus edges; park them parallel to the union tree
    surplus = removed - len(t1) - len(t2)
    if surplus < 0:
        raise NormalizationError("merge would create edges")
    extra = [t1[r % len(t1)] for r in range(surplus)]
    new_edges = t1 + extra + t2
    fresh = max(g.edge_ids, default=-1) + 1
    edges = [g.edges[e] for e in keep] + new_edges
    ids = [g.edge_ids[e] for e in keep] + list(range(fresh, fresh + len(new_edges)))
    colors = [c.colors[e] for e in keep] + [i] * (len(t1) + surplus) + [j] * len(t2)
    return Graph(g.n, tuple(edges), tuple(ids)), EdgeColoring(tuple(colors))


@dataclass(frozen=True)
class NormalizationStep:
    pair: tuple[int, int]
    order_before: tuple[int, ...]
    order_after: tuple[int, ...]


@dataclass
class NormalizationTrace:
    steps: list[NormalizationStep]
    final_graph: Graph
    final_coloring: EdgeColoring
    spanning_classes: list[int] = field(default_factory=list)

    def to_dict(self) -> dict:
        g = self.final_graph
        return {
            "steps": [
                {
                    "pair": list(s.pair),
                    "order_before": list(s.order_before),
                    "order_after": list(s.order_after),
                }
                for s in self.steps
            ],
            "spanning_classes": self.spanning_classes,
            "n": g.n,
            "m": g.m,
            "edges": [
                [eid, u, v, col] for eid, (u, v), col in zip(g.edge_ids, g.edges, self.final_coloring.colors)
            ],
        }


def spanning_tree_classes(g: Graph, c: EdgeColoring) -> list[int]:
    out = []
    for col, idx in sorted(_class_edges(c).items()):
        comps = _components(g, idx)
        if len(comps) == 1 and len(comps[0]) == g.n and len(idx) == g.n - 1:
            out.append(col)
    return out


def normalize(g: Graph, c: EdgeColoring, k: int, check: bool = False, max_steps: int = 100_000) -> NormalizationTrace:
    """Merge crossing classes until none remain.

    ``check=True`` re-verifies RMC_k after every step.
    """
    if g.n < 2:
        raise ColoringError("normalization needs at least two vertices")
    verdict = is_rmc_k(g, c, k)
    if not verdict:
        raise ColoringError(f"input is not an RMC_{k}-coloring (pair {verdict.failing_pair})")
    _class_vertices(g, c)  # connectivity precondition
    steps: list[NormalizationStep] = []
    n, m = g.n, g.m
    while True:
        pair = find_crossing_pair(g, c)
        if pair is None:
            break
        if len(steps) >= max_steps:
            raise NormalizationError(f"no termination after {max_steps} steps")
        before = class_order_sequence(g, c)
        g, c = merge_step(g, c, *pair)
        after = class_order_sequence(g, c)
        step = NormalizationStep(pair, before, after)
        if g.n != n or g.m != m:
            raise NormalizationError(f"step {len(steps)} changed the size: {step}")
        if not before < after:
            raise NormalizationError(f"step {len(steps)} did not increase the order sequence: {step}")
        if check and not is_rmc_k(g, c, k):
            raise NormalizationError(f"step {len(steps)} lost the RMC_{k} property: {step}")
        steps.append(step)
    spanning = [col for col, idx in sorted(_class_edges(c).items())
                if len({x for e in idx for x in g.edges[e]}) == g.n]
    trees = spanning_tree_classes(g, c)
    if len(spanning) < k:
        raise NormalizationError(f"only {len(spanning)} spanning classes after normalization, need {k}")
    return NormalizationTrace(steps, g, c, trees if len(trees) >= k else spanning)
