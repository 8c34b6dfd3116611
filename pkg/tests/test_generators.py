import pytest

from hypnet.generators import (
    broom,
    cartesian_cycle_path,
    chord_cycle,
    complete,
    cycle,
    grid,
    lexicographic_cycle_clique,
    path,
    ringed_tree,
    star,
    subdivision,
    triangulation_growth,
    two_clique_block,
    y_graph,
    y_graph_coords,
)
from hypnet.graphs import GraphError, all_pairs, diameter, write_edge_list


def test_standard_families():
    g22 = grid(2, 2)
    assert g22.n == 4 and all(g22.degree(v) == 2 for v in range(4))  # a 4-cycle
    assert cycle(3).adj == complete(3).adj
    g = grid(4, 6)
    assert g.n == 24 and g.m == 2 * 4 * 6 - 4 - 6
    assert star(5).n == 6 and star(5).degree(0) == 5
    assert path(1).n == 1


def test_generator_determinism():
    for build in (lambda: ringed_tree(4), lambda: chord_cycle(13), lambda: y_graph(2, 4)):
        assert write_edge_list(build()) == write_edge_list(build())
    a = triangulation_growth(7, 20, seed=5)
    b = triangulation_growth(7, 20, seed=5)
    assert write_edge_list(a.graph) == write_edge_list(b.graph)
    c = triangulation_growth(7, 20, seed=6)
    assert write_edge_list(a.graph) != write_edge_list(c.graph)


def test_ringed_tree_structure():
    g = ringed_tree(4)
    assert g.n == 2**5 - 1
    # level sizes are powers of two
    dm = all_pairs(g)
    for i in range(5):
        assert int((dm.dist[0] == i).sum()) == 2**i
    # hub level-1 pair carries both the tree edges and a ring edge
    assert g.has_edge(1, 2) and g.has_edge(0, 1) and g.has_edge(0, 2)


def test_cartesian_cycle_path():
    assert cartesian_cycle_path(3, 1).adj == cycle(3).adj
    g = cartesian_cycle_path(5, 4)
    assert g.n == 20
    # contains an isometric floor(l/2) x (floor(l/2)+1) grid
    g = cartesian_cycle_path(8, 32)
    dm = all_pairs(g)
    L = 32
    ids = {(a, b): a * L + b for a in range(4) for b in range(5)}
    for (a1, b1), v1 in ids.items():
        for (a2, b2), v2 in ids.items():
            assert dm.d(v1, v2) == abs(a1 - a2) + abs(b1 - b2)


def test_lexicographic_cycle_clique():
    assert lexicographic_cycle_clique(5, 1).adj == cycle(5).adj
    g = lexicographic_cycle_clique(4, 3)
    assert g.n == 12
    assert all(g.degree(v) == (3 - 1) + 2 for v in range(g.n))
    # nonplanar for clique size >= 3 (toroidal tube)
    import networkx as nx

    gx = nx.Graph(list(g.edges()))
    ok, _ = nx.check_planarity(gx)
    assert not ok


def test_subdivision():
    g = cycle(3)
    assert subdivision(g, 1).adj == g.adj
    s = subdivision(g, 3)
    assert s.n == 9 and s.adj != g.adj
    assert diameter(all_pairs(s))[0] == diameter(all_pairs(cycle(9)))[0]
    s2 = subdivision(grid(2, 3), 2)
    assert s2.n == 6 + 7


def test_broom_chord_cycle():
    g = broom(5, 5)
    assert g.n == 11 and g.degree(0) == 6
    g = chord_cycle(16)
    assert all(g.degree(v) == g.degree(0) for v in range(16))
    assert diameter(all_pairs(g))[0] <= 3
    with pytest.raises(GraphError):
        broom(0, 1)


def test_y_graph_shape():
    h, k = 2, 3
    g = y_graph(h, k)
    assert g.n == h * h + 2 * h * k + 3 * h * k
    coords = y_graph_coords(h, k)
    assert len(coords) == g.n
    # three extremal tips exist
    xs = [c[0] for c in coords]
    ys = [c[1] for c in coords]
    assert max(xs) == h + 3 * k - 1 and max(ys) == h + k - 1 and min(ys) == -k


def test_two_clique_block():
    g = two_clique_block(4)
    assert g.n == 7 and g.degree(0) == 6
    assert diameter(all_pairs(g))[0] == 2


def test_triangulation_growth_properties():
    for d in (6, 7):
        eg = triangulation_growth(d, 25, seed=2)
        g = eg.graph
        sizes = sorted(len(f) for f in eg.faces)
        assert sizes[:-1] == [3] * (len(sizes) - 1)  # one outer face, rest triangles
        boundary = [v for v in range(g.n) if not eg.is_interior(v)]
        assert boundary and all(g.degree(v) < d for v in boundary)
        interior = [v for v in range(g.n) if eg.is_interior(v)]
        assert interior and all(g.degree(v) >= 3 for v in interior)


def test_triangulation_growth_closes_at_degree_five():
    eg = triangulation_growth(5, 30, seed=1)
    g = eg.graph
    # degree-5 growth closes into the icosahedron
    assert g.n == 12 and all(g.degree(v) == 5 for v in range(12))
    assert all(len(f) == 3 for f in eg.faces)
