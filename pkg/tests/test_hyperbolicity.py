import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import (
    brute_delta_four_point,
    brute_slim,
    brute_thin,
    random_connected_graph,
    random_tree,
)
from hypnet.generators import (
    broom,
    chord_cycle,
    complete,
    cycle,
    grid,
    path,
    ringed_tree,
    star,
    subdivision,
)
from hypnet.graphs import GraphError, HalfInt, all_pairs, build_graph, diameter
from hypnet.hyperbolicity import (
    articulation_points,
    biconnected_blocks,
    delta_at_root,
    delta_four_point,
    delta_four_point_pruned,
    delta_rooted_extremes,
    far_apart_pairs,
    gromov_product,
    induced_subgraph,
    separator_bound,
    simplicial_counterexample_search,
    slim_triangles_constant,
    thin_triangles_constant,
)


def test_gromov_product_examples():
    dm = all_pairs(path(3))
    assert gromov_product(dm, 1, 1, 0) == HalfInt.from_int(1)  # (x.x)_r = d(x,r)
    assert gromov_product(dm, 1, 0, 0).doubled == 0  # (x.r)_r = 0
    assert gromov_product(dm, 1, 2, 0) == HalfInt.from_int(1)  # (b.c)_a on a path


def test_delta_at_root_examples(rng):
    for _ in range(5):
        t = random_tree(rng.randint(3, 14), rng)
        dm = all_pairs(t)
        assert all(delta_at_root(dm, r).doubled == 0 for r in range(t.n))
    dm = all_pairs(cycle(4))
    assert all(delta_at_root(dm, r) == HalfInt.from_int(1) for r in range(4))
    dm = all_pairs(complete(4))
    assert all(delta_at_root(dm, r).doubled == 0 for r in range(4))


def test_four_point_examples():
    assert delta_four_point(all_pairs(cycle(5)))[0] == HalfInt(1)
    assert delta_four_point(all_pairs(cycle(4)))[0] == HalfInt.from_int(1)
    assert delta_four_point(all_pairs(star(5)))[0].doubled == 0
    # witness of C4 is the full vertex set with sums (4, 2, 2)
    d, w = delta_four_point(all_pairs(cycle(4)))
    assert w.vertices == (0, 1, 2, 3) and sorted(w.sums, reverse=True) == [4, 2, 2]
    assert w.delta_hat == d


def test_four_point_matches_brute(rng):
    for _ in range(25):
        g = random_connected_graph(rng.randint(4, 13), rng.uniform(0.2, 0.7), rng)
        want = brute_delta_four_point(g)
        dm = all_pairs(g)
        assert delta_four_point(dm)[0].doubled == want
        assert delta_four_point_pruned(dm)[0].doubled == want


def test_pruned_examples_and_stats():
    dm = all_pairs(cycle(10))
    stats = {}
    d, _ = delta_four_point_pruned(dm, stats)
    assert d == delta_four_point(dm)[0] == HalfInt.from_int(2)
    # far-apart filtering really prunes: C10 has 5 antipodal pairs only
    assert stats["far_apart_pairs"] == 5
    unpruned = (10 * 9 // 2) * (10 * 9 // 2 - 1) // 2
    assert stats["combos"] < unpruned
    dm = all_pairs(grid(4, 6))
    assert delta_four_point_pruned(dm)[0] == HalfInt.from_int(3)


def test_rooted_extremes_identity(rng):
    # the four-point value equals the worst root
    for g in (cycle(7), grid(3, 4), chord_cycle(12), ringed_tree(3)):
        dm = all_pairs(g)
        lo, hi = delta_rooted_extremes(dm)
        assert hi == delta_four_point(dm)[0]
        assert hi.doubled <= 2 * lo.doubled


def test_far_apart_pairs_cycle():
    fp = far_apart_pairs(all_pairs(cycle(8)))
    assert all(fp[i, (i + 4) % 8] for i in range(8))
    assert not fp[0, 1] and not fp[0, 3]


def test_thin_examples():
    assert thin_triangles_constant(cycle(5), all_pairs(cycle(5))) == HalfInt.from_int(2)
    assert thin_triangles_constant(cycle(4), all_pairs(cycle(4))) == HalfInt.from_int(2)
    t = broom(4, 4)
    assert thin_triangles_constant(t, all_pairs(t)).doubled == 0


def test_slim_examples():
    t = broom(5, 3)
    assert slim_triangles_constant(t, all_pairs(t)).doubled == 0
    g = cycle(6)
    dm = all_pairs(g)
    assert slim_triangles_constant(g, dm).doubled == brute_slim(g)


def test_thin_slim_match_brute(rng):
    for _ in range(8):
        g = random_connected_graph(rng.randint(4, 8), rng.uniform(0.3, 0.7), rng)
        dm = all_pairs(g)
        assert thin_triangles_constant(g, dm).doubled == brute_thin(g)
        assert slim_triangles_constant(g, dm).doubled == brute_slim(g)


def test_triangle_chain_properties(rng):
    for _ in range(12):
        g = random_connected_graph(rng.randint(4, 16), rng.uniform(0.15, 0.6), rng)
        dm = all_pairs(g)
        d4 = delta_four_point(dm)[0]
        thin = thin_triangles_constant(g, dm)
        slim = slim_triangles_constant(g, dm)
        assert d4.doubled <= thin.doubled <= 4 * d4.doubled + 1
        assert slim.doubled <= thin.doubled
        assert 2 * d4.doubled <= 2 * diameter(dm)[0]  # delta <= diam / 2


def test_subdivision_shift(rng):
    for k in (2, 3, 4):
        for g in (cycle(5), grid(2, 3), complete(4)):
            base = delta_four_point(all_pairs(g))[0]
            sub = subdivision(g, k)
            after = delta_four_point(all_pairs(sub))[0]
            assert after.doubled <= base.doubled + 4 * k


def test_separator_bound_examples():
    # two triangles sharing a vertex
    g = build_graph([(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
    dm = all_pairs(g)
    sb = separator_bound(g, dm, [0])
    assert sb.separator_diameter == 0 and sb.bound.doubled == 0
    assert delta_four_point(dm)[0].doubled == 0
    # barbell: two K4s joined by a path
    edges = list(itertools.combinations(range(4), 2))
    edges += [(a + 4, b + 4) for a, b in itertools.combinations(range(4), 2)]
    edges += [(3, 8), (8, 9), (9, 4)]
    g = build_graph(edges)
    dm = all_pairs(g)
    sb = separator_bound(g, dm, [8])
    assert sb.bound.doubled >= delta_four_point(dm)[0].doubled


def test_separator_bound_errors():
    g = cycle(6)
    dm = all_pairs(g)
    with pytest.raises(GraphError):
        separator_bound(g, dm, [0])  # removing one cycle vertex keeps it connected
    with pytest.raises(GraphError):
        separator_bound(g, dm, [0, 3])  # separator induces a disconnected pair


def test_separator_bound_random(rng):
    found = 0
    while found < 15:
        g = random_connected_graph(rng.randint(5, 12), rng.uniform(0.15, 0.4), rng)
        arts = articulation_points(g)
        if not arts:
            continue
        found += 1
        dm = all_pairs(g)
        sb = separator_bound(g, dm, [arts[0]])
        assert delta_four_point(dm)[0].doubled <= sb.bound.doubled


def test_blocks_decomposition(rng):
    for _ in range(10):
        g = random_connected_graph(rng.randint(4, 11), rng.uniform(0.2, 0.45), rng)
        blocks = biconnected_blocks(g)
        covered = set()
        for blk in blocks:
            covered.update(blk)
        assert covered == set(range(g.n))
        d4 = delta_four_point(all_pairs(g))[0]
        per = []
        for blk in blocks:
            sub, _ = induced_subgraph(g, blk)
            per.append(delta_four_point(all_pairs(sub))[0])
        assert max(per) == d4


def test_simplicial_counterexample():
    hit = simplicial_counterexample_search(6)
    assert hit is not None
    assert hit.delta_after < hit.delta_before
    # smallest hit is the diamond: delta drops 1/2 -> 0
    assert hit.graph.n == 4
    assert hit.delta_before == HalfInt(1) and hit.delta_after.doubled == 0
    # trees never trigger
    nz = hit.graph.adj[hit.vertex]
    assert all(hit.graph.has_edge(a, b) for a, b in itertools.combinations(nz, 2))


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_pruned_equals_brute_property(data):
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    n = data.draw(st.integers(4, 14))
    g = random_connected_graph(n, rng.uniform(0.15, 0.65), rng)
    dm = all_pairs(g)
    assert delta_four_point(dm)[0] == delta_four_point_pruned(dm)[0]


@settings(max_examples=25, deadline=None)
@given(st.data())
def test_root_robustness_property(data):
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    n = data.draw(st.integers(4, 14))
    g = random_connected_graph(n, rng.uniform(0.2, 0.6), rng)
    dm = all_pairs(g)
    lo, hi = delta_rooted_extremes(dm)
    assert hi.doubled <= 2 * lo.doubled
