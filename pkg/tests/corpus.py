"""Small-graph corpora built with networkx (test-only dependency)."""

from __future__ import annotations

import random
from functools import lru_cache

import networkx as nx

from rmck.graph import Graph


def to_graph(h: nx.Graph) -> Graph:
    h = nx.convert_node_labels_to_integers(h)
    return Graph(h.number_of_nodes(), tuple(sorted(tuple(sorted(e)) for e in h.edges())))


@lru_cache(maxsize=None)
def connected_atlas(max_n: int = 7, min_n: int = 1) -> tuple[Graph, ...]:
    """Every connected simple graph with min_n <= n <= max_n (max_n <= 7), up to isomorphism."""
    out = []
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if min_n <= n <= max_n and nx.is_connected(h):
            out.append(to_graph(h))
    return tuple(out)


@lru_cache(maxsize=None)
def connected_with_few_edges(max_m: int) -> tuple[Graph, ...]:
    """Every connected simple graph with 1 <= m <= max_m (max_m <= 8), up to isomorphism."""
    if max_m > 8:
        raise ValueError("corpus only built for m <= 8")
    out = [g for g in connected_atlas(7, 2) if g.m <= max_m]
    # n = 8, 9 need m >= 7, 8: trees on 8 and 9 vertices and unicyclic graphs on 8
    extra: list[nx.Graph] = []
    if max_m >= 7:
        extra += list(nx.nonisomorphic_trees(8))
    if max_m >= 8:
        extra += list(nx.nonisomorphic_trees(9))
        uni: list[nx.Graph] = []
        for t in nx.nonisomorphic_trees(8):
            for u in range(8):
                for v in range(u + 1, 8):
                    if not t.has_edge(u, v):
                        h = t.copy()
                        h.add_edge(u, v)
                        if not any(nx.is_isomorphic(h, x) for x in uni):
                            uni.append(h)
        extra += uni
    out += [to_graph(h) for h in extra]
    return tuple(out)


def random_connected(rng: random.Random, n: int, m: int) -> Graph:
    """Uniform over labelled connected simple (n, m) graphs, by rejection."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if not n - 1 <= m <= len(pairs):
        raise ValueError("no connected graph with these parameters")
    while True:
        g = Graph(n, tuple(sorted(rng.sample(pairs, m))))
        if g.is_connected():
            return g
