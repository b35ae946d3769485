import random

import pytest

from rmck.coloring import ColoringError, EdgeColoring, baseline_coloring, is_rmc_k, perfectly_connected_coloring
from rmck.graph import Graph, gen_complete, gen_cycle, gen_perfectly_connected
from rmck.normalizer import (
    class_order_sequence,
    find_crossing_pair,
    merge_step,
    normalize,
    spanning_tree_classes,
)


def test_crossing_pair_examples():
    k4 = gen_complete(4)
    assert find_crossing_pair(k4, baseline_coloring(k4, 2)) is None
    # classes on {0,1,2} and {1,2,3}
    g = Graph(4, ((0, 1), (1, 2), (1, 3), (2, 3)))
    assert find_crossing_pair(g, EdgeColoring((1, 1, 2, 2))) == (1, 2)
    # containment {0,1} inside {0,1,2}
    g = Graph(3, ((0, 1), (0, 1), (1, 2)))
    assert find_crossing_pair(g, EdgeColoring((1, 2, 2))) is None


def test_merge_on_overlapping_paths():
    g = Graph(4, ((0, 1), (1, 2), (1, 3), (2, 3)))
    h, c = merge_step(g, EdgeColoring((1, 1, 2, 2)), 1, 2)
    assert h.m == 4 and h.n == 4
    sizes = {col: sum(1 for x in c.colors if x == col) for col in set(c.colors)}
    assert sizes == {1: 3, 2: 1}
    assert find_crossing_pair(h, c) is None
    assert class_order_sequence(h, c) == (4, 2) > class_order_sequence(g, EdgeColoring((1, 1, 2, 2)))


def test_merge_with_single_shared_vertex_keeps_edge_count():
    g = Graph(5, ((0, 1), (1, 2), (2, 3), (3, 4)))
    h, c = merge_step(g, EdgeColoring((1, 1, 2, 2)), 1, 2)
    assert h.m == 4 and set(c.colors) == {1}


def test_merge_with_cyclic_class_parks_surplus():
    g = Graph(4, ((0, 1), (1, 2), (2, 0), (2, 3)))
    h, c = merge_step(g, EdgeColoring((1, 1, 1, 2)), 1, 2)
    assert h.m == 4
    assert not h.is_simple()


def test_merge_requires_crossing():
    k4 = gen_complete(4)
    with pytest.raises(ColoringError):
        merge_step(k4, baseline_coloring(k4, 2), 1, 2)


def test_normalize_baseline_without_adjacent_trivial_edges_is_fixed_point():
    g = gen_complete(4)
    tr = normalize(g, baseline_coloring(g, 2), 2)
    assert tr.steps == [] and tr.spanning_classes == [1, 2]


def test_normalize_baseline_merges_adjacent_trivial_edges():
    # single-edge classes sharing a vertex cross each other
    g = gen_complete(6)
    tr = normalize(g, baseline_coloring(g, 2), 2, check=True)
    assert len(tr.steps) > 0
    assert len(spanning_tree_classes(tr.final_graph, tr.final_coloring)) >= 2


def test_normalize_perfectly_connected():
    parts = [gen_complete(4)] * 2
    g = gen_perfectly_connected(2, 2, parts)
    tr = normalize(g, perfectly_connected_coloring(g, 2, parts), 2, check=True)
    assert len(tr.steps) >= 1
    assert len(spanning_tree_classes(tr.final_graph, tr.final_coloring)) >= 2
    assert tr.final_graph.m == 32 >= 2 * (g.n - 1)
    for s in tr.steps:
        assert s.order_before < s.order_after
    d = tr.to_dict()
    assert d["m"] == 32 and len(d["edges"]) == 32


def test_normalize_rejects_non_rmc_input():
    # two 2-edge paths on C_4 leave the pair (1, 3) uncovered
    with pytest.raises(ColoringError):
        normalize(gen_cycle(4), EdgeColoring((1, 1, 2, 2)), 1)
    h, c = merge_step(gen_cycle(4), EdgeColoring((1, 1, 2, 2)), 1, 2)
    assert spanning_tree_classes(h, c) == [1]


@pytest.mark.parametrize("seed", range(15))
def test_normalize_random_improved_colorings(seed):
    from rmck.coloring import improve_coloring

    rng = random.Random(seed)
    n = rng.randint(4, 8)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    g = Graph(n, tuple(rng.sample(pairs, rng.randint(2 * n - 2, len(pairs)))))
    if not g.is_connected():
        return
    for _ in range(50):
        c = EdgeColoring(tuple(rng.randint(1, 3) for _ in range(g.m)))
        if is_rmc_k(g, c, 1):
            c = improve_coloring(g, c, 1)
            tr = normalize(g, c, 1, check=True)
            assert tr.final_graph.m == g.m
            assert len(spanning_tree_classes(tr.final_graph, tr.final_coloring)) >= 1
            return
