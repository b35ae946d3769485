import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rmck.coloring import (
    ColoringError,
    EdgeColoring,
    NoPackingError,
    baseline_coloring,
    color_classes,
    coverage_matrix,
    improve_coloring,
    is_rmc_k,
    nontrivial_color_degree_check,
    pair_coverage,
    perfectly_connected_coloring,
)
from rmck.graph import Graph, gen_complete, gen_cycle, gen_perfectly_connected

from corpus import connected_atlas, random_connected
from oracles import literal_rmc_k


def C(*cols):
    return EdgeColoring(tuple(cols))


def test_class_summary_examples():
    k4 = gen_complete(4)
    s = color_classes(k4, baseline_coloring(k4, 2))
    assert s.colors_used == 2 and s.all_trees and s.waste == 4
    c4 = gen_cycle(4)
    s = color_classes(c4, C(1, 1, 1, 1))
    assert s.colors_used == 1 and not s.all_trees and s.waste == 3
    s = color_classes(c4, C(1, 2, 3, 4))
    assert s.colors_used == 4 and s.waste == 0
    assert all(cl.is_trivial for cl in s.classes.values())


def test_verifier_examples():
    k4 = gen_complete(4)
    assert is_rmc_k(k4, baseline_coloring(k4, 2), 2)
    c4 = gen_cycle(4)
    verdict = is_rmc_k(c4, C(1, 2, 3, 4), 1)
    assert not verdict and verdict.coverage == 0
    u, v = verdict.failing_pair
    assert abs(u - v) == 2
    assert not is_rmc_k(gen_cycle(5), C(1, 1, 1, 1, 1), 2)


def test_pair_coverage_examples():
    k4 = gen_complete(4)
    base = baseline_coloring(k4, 2)
    assert all(pair_coverage(k4, base, u, v) == 2 for u in range(4) for v in range(u + 1, 4))
    c4 = gen_cycle(4)
    assert pair_coverage(c4, C(1, 2, 3, 4), 0, 1) == 1
    assert pair_coverage(c4, C(1, 2, 3, 4), 0, 2) == 0
    with pytest.raises(ValueError):
        pair_coverage(c4, C(1, 2, 3, 4), 1, 1)


def test_parallel_edges_count_twice():
    g = Graph(2, ((0, 1), (0, 1)))
    assert is_rmc_k(g, C(1, 2), 2)
    assert not is_rmc_k(g, C(1, 1), 2)


def test_baseline_counts():
    assert baseline_coloring(gen_complete(4), 2).num_colors == 2
    assert baseline_coloring(gen_complete(6), 2).num_colors == 7
    with pytest.raises(NoPackingError) as err:
        baseline_coloring(gen_cycle(5), 2)
    assert len(err.value.witness) == 5


@pytest.mark.parametrize("seed", range(10))
def test_baseline_random(seed):
    rng = random.Random(seed)
    n = rng.randint(4, 14)
    g = random_connected(rng, n, rng.randint(min(2 * n, n * (n - 1) // 2), n * (n - 1) // 2))
    for k in (1, 2):
        c = baseline_coloring(g, k)
        assert is_rmc_k(g, c, k) and c.num_colors == g.m - k * (g.n - 2)


@pytest.mark.parametrize("k,s,size", [(2, 2, 4), (2, 3, 4), (1, 2, 3)])
def test_perfectly_connected_examples(k, s, size):
    parts = [gen_complete(size)] * s
    g = gen_perfectly_connected(k, s, parts)
    c = perfectly_connected_coloring(g, k, parts)
    assert is_rmc_k(g, c, k)
    assert c.num_colors == g.m - k * (g.n - 2) + s - 1
    if (k, s) == (2, 2):
        assert c.num_colors == 19


def test_perfectly_connected_rejects_wrong_graph():
    parts = [gen_complete(4)] * 2
    with pytest.raises(ColoringError):
        perfectly_connected_coloring(gen_complete(9), 2, parts)
    with pytest.raises(ColoringError):
        perfectly_connected_coloring(gen_complete(9), 2, [])


def test_improve_examples():
    c4 = gen_cycle(4)
    out = improve_coloring(c4, C(1, 1, 1, 1), 1)
    assert out.num_colors == 2 and is_rmc_k(c4, out, 1)
    sizes = sorted(len(cl.edges) for cl in color_classes(c4, out).classes.values())
    assert sizes == [1, 3]
    k4 = gen_complete(4)
    base = baseline_coloring(k4, 2)
    assert improve_coloring(k4, base, 2) == base
    # two components in one color on a 4-path with an extra spanning class
    g = Graph(4, ((0, 1), (1, 2), (2, 3), (0, 1), (2, 3)))
    assert color_classes(g, C(1, 2, 1, 3, 3)).classes[1].components == 2
    c2 = C(1, 1, 1, 2, 2)
    out = improve_coloring(g, c2, 1)
    assert out.num_colors == 3


@pytest.mark.parametrize("g", connected_atlas(5, 2)[::2], ids=repr)
def test_improve_properties(g):
    rng = random.Random(g.m * 31 + g.n)
    for _ in range(20):
        c = EdgeColoring(tuple(rng.randint(1, 3) for _ in range(g.m)))
        for k in (1, 2):
            if not is_rmc_k(g, c, k):
                continue
            out = improve_coloring(g, c, k)
            assert is_rmc_k(g, out, k)
            assert out.num_colors >= c.num_colors
            assert color_classes(g, out).all_trees
            assert improve_coloring(g, out, k) == out


def test_nontrivial_color_degree():
    assert nontrivial_color_degree_check(gen_complete(4), baseline_coloring(gen_complete(4), 2), 2)
    assert nontrivial_color_degree_check(gen_complete(6), baseline_coloring(gen_complete(6), 3), 3)
    with pytest.raises(ValueError):
        nontrivial_color_degree_check(gen_complete(4), baseline_coloring(gen_complete(4), 1), 1)


def test_canonical_and_mapping():
    g = gen_cycle(4)
    c = C(7, 3, 7, 9)
    assert c.canonical() == C(1, 2, 1, 3)
    assert EdgeColoring.from_mapping(g, c.assignment(g)) == c
    with pytest.raises(ColoringError):
        EdgeColoring.from_mapping(g, {0: 1})
    with pytest.raises(ColoringError):
        C(0, 1)


@st.composite
def graph_and_coloring(draw):
    atlas = connected_atlas(5, 2)
    g = atlas[draw(st.integers(0, len(atlas) - 1))]
    cols = draw(st.lists(st.integers(1, 4), min_size=g.m, max_size=g.m))
    return g, EdgeColoring(tuple(cols))


@settings(max_examples=300, deadline=None)
@given(graph_and_coloring(), st.integers(1, 3))
def test_verifier_matches_literal_paths(gc, k):
    g, c = gc
    assert bool(is_rmc_k(g, c, k)) == literal_rmc_k(g.n, list(g.edges), c.colors, k)


@settings(max_examples=200, deadline=None)
@given(graph_and_coloring())
def test_coverage_monotone_and_degree_bound(gc):
    g, c = gc
    cov = coverage_matrix(g, c)
    assert (cov == cov.T).all()
    s = color_classes(g, c)
    assert s.colors_used + s.waste == g.m
    for k in (2, 3):
        if is_rmc_k(g, c, k):
            assert is_rmc_k(g, c, k - 1)
            assert nontrivial_color_degree_check(g, c, k)
