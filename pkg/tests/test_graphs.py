import math
from fractions import Fraction

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_connected_graph, to_networkx
from hypnet.generators import complete, cycle, grid, path
from hypnet.graphs import (
    GraphError,
    HalfInt,
    all_pairs,
    build_components,
    build_graph,
    count_paths_through,
    diameter,
    read_edge_list,
    write_edge_list,
)


def test_build_path():
    g = build_graph([(0, 1), (1, 2)])
    assert g.n == 3 and g.m == 2
    assert g.adj == ((1,), (0, 2), (1,))


def test_build_triangle_diameter():
    g = build_graph([(0, 1), (1, 2), (2, 0)])
    assert diameter(all_pairs(g)) == (1, (0, 1))


def test_c6_diameter():
    assert diameter(all_pairs(cycle(6)))[0] == 3


def test_self_loop_rejected():
    with pytest.raises(GraphError):
        build_graph([(0, 0), (0, 1)])


def test_duplicate_edge_warns():
    with pytest.warns(UserWarning):
        g = build_graph([(0, 1), (1, 0), (1, 2)])
    assert g.m == 2


def test_disconnected_rejected_and_split():
    with pytest.raises(GraphError):
        build_graph([(0, 1), (2, 3)])
    comps = build_components([(0, 1), (2, 3), (3, 4)])
    assert [c.n for c in comps] == [3, 2]


def test_label_reindexing():
    g = build_graph([(10, 20), (20, 5)])
    assert g.labels == (5, 10, 20)
    assert g.n == 3


def test_c4_sigma():
    dm = all_pairs(cycle(4))
    assert dm.d(0, 2) == 2 and dm.paths(0, 2) == 2


def test_path_endpoints():
    dm = all_pairs(path(5))
    assert dm.d(0, 4) == 4 and dm.paths(0, 4) == 1


def test_grid_corner_paths():
    dm = all_pairs(grid(3, 3))
    assert dm.d(0, 8) == 4 and dm.paths(0, 8) == math.comb(4, 2)


def test_k5_c10_diameters():
    assert diameter(all_pairs(complete(5)))[0] == 1
    assert diameter(all_pairs(cycle(10)))[0] == 5


def test_grid_diameter():
    assert diameter(all_pairs(grid(4, 7)))[0] == 3 + 6


def test_count_paths_through_examples():
    dm = all_pairs(path(3))
    assert count_paths_through(dm, 0, 2, 1) == 1
    dm = all_pairs(cycle(4))
    assert count_paths_through(dm, 0, 2, 1) == Fraction(1, 2)
    assert count_paths_through(dm, 0, 1, 2) == 0
    assert count_paths_through(dm, 0, 1, 0) == 1
    with pytest.raises(GraphError):
        count_paths_through(dm, 1, 1, 0)


def test_distance_matrix_against_networkx(rng):
    for _ in range(10):
        g = random_connected_graph(rng.randint(3, 24), rng.uniform(0.15, 0.7), rng)
        dm = all_pairs(g)
        gx = to_networkx(g)
        want = dict(nx.all_pairs_shortest_path_length(gx))
        for u in range(g.n):
            for v in range(g.n):
                assert dm.d(u, v) == want[u][v]


def test_sigma_against_networkx(rng):
    for _ in range(6):
        g = random_connected_graph(rng.randint(3, 12), rng.uniform(0.2, 0.7), rng)
        dm = all_pairs(g)
        gx = to_networkx(g)
        for u in range(g.n):
            for v in range(g.n):
                if u != v:
                    assert dm.paths(u, v) == len(list(nx.all_shortest_paths(gx, u, v)))


def test_sigma_recurrence(rng):
    g = random_connected_graph(14, 0.3, rng)
    dm = all_pairs(g)
    for u in range(g.n):
        for v in range(g.n):
            if u == v:
                continue
            total = sum(
                dm.paths(u, w) for w in g.adj[v] if dm.d(u, w) == dm.d(u, v) - 1
            )
            assert dm.paths(u, v) == total


def test_interior_mass_identity(rng):
    # summed through-fractions over geodesic interiors equal d(u,v) - 1
    g = random_connected_graph(12, 0.35, rng)
    dm = all_pairs(g)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            mass = sum(
                count_paths_through(dm, u, v, w)
                for w in range(g.n)
                if w not in (u, v)
            )
            assert mass == dm.d(u, v) - 1


def test_triangle_inequality_and_symmetry(rng):
    g = random_connected_graph(16, 0.25, rng)
    D = all_pairs(g).dist
    assert (D == D.T).all() and (np.diag(D) == 0).all()
    n = g.n
    for k in range(n):
        assert (D <= D[:, [k]] + D[[k], :]).all()


def test_parallel_apsp_identical(rng):
    g = random_connected_graph(300, 0.02, rng)
    a = all_pairs(g, workers=1)
    b = all_pairs(g, workers=2)
    assert (a.dist == b.dist).all()
    assert a.sigma == b.sigma


def test_edge_list_round_trip():
    g = cycle(6)
    text = write_edge_list(g)
    g2 = read_edge_list("# comment\n" + text)
    assert g2.adj == g.adj
    assert write_edge_list(g2) == text


def test_edge_list_errors():
    with pytest.raises(GraphError):
        read_edge_list("1 2 3\n")
    with pytest.raises(GraphError):
        read_edge_list("a b\n")


def test_halfint_basics():
    h = HalfInt(3)
    assert str(h) == "3/2" and float(h) == 1.5 and not h.is_integer
    assert h + HalfInt(1) == HalfInt(4)
    assert h - 1 == HalfInt(1)
    assert 2 * h == HalfInt(6)
    assert (-h).doubled == -3
    assert h.as_fraction() == Fraction(3, 2)
    assert HalfInt.from_int(2) == HalfInt(4)
    assert str(HalfInt(4)) == "2"


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_apsp_random_bfs_probe(data):
    n = data.draw(st.integers(4, 18))
    rng = __import__("random").Random(data.draw(st.integers(0, 10**6)))
    g = random_connected_graph(n, rng.uniform(0.2, 0.6), rng)
    dm = all_pairs(g)
    s = data.draw(st.integers(0, g.n - 1))
    # fresh simple BFS oracle, no shared code
    dist = {s: 0}
    frontier = [s]
    while frontier:
        nxt = []
        for u in frontier:
            for w in g.adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    nxt.append(w)
        frontier = nxt
    assert all(dm.d(s, v) == dist[v] for v in range(n))
