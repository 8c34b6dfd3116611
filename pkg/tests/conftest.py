"""Shared helpers: random graph generation and independent brute-force oracles.

Every oracle here is deliberately implemented from first principles (plain
loops, networkx path enumeration, subset scans) so it never shares code with
the implementation paths it checks.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

import networkx as nx
import pytest

from hypnet.graphs import Graph, GraphError, build_graph


def random_connected_graph(n: int, p: float, rng: random.Random) -> Graph:
    while True:
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
        if len(edges) < n - 1:
            continue
        try:
            return build_graph(edges)
        except GraphError:
            continue


def random_tree(n: int, rng: random.Random) -> Graph:
    return build_graph([(rng.randrange(0, i), i) for i in range(1, n)])


def to_networkx(g: Graph) -> nx.Graph:
    gx = nx.Graph()
    gx.add_nodes_from(range(g.n))
    gx.add_edges_from(g.edges())
    return gx


def brute_delta_four_point(g: Graph) -> int:
    """Doubled four-point value by a plain quadruple loop over nx distances."""
    gx = to_networkx(g)
    dist = dict(nx.all_pairs_shortest_path_length(gx))
    best = 0
    for a, b, c, d in itertools.combinations(range(g.n), 4):
        s1 = dist[a][c] + dist[b][d]
        s2 = dist[a][d] + dist[b][c]
        s3 = dist[a][b] + dist[c][d]
        top, mid, _ = sorted((s1, s2, s3), reverse=True)
        best = max(best, top - mid)
    return best


def all_geodesics(g: Graph, x: int, y: int):
    gx = to_networkx(g)
    return [tuple(p) for p in nx.all_shortest_paths(gx, x, y)]


def brute_thin(g: Graph) -> int:
    """Doubled thin constant by explicit enumeration of geodesic pairs."""
    gx = to_networkx(g)
    dist = dict(nx.all_pairs_shortest_path_length(gx))
    best = 0
    for x in range(g.n):
        for y in range(g.n):
            for z in range(y + 1, g.n):
                if x in (y, z):
                    continue
                prod2 = dist[x][y] + dist[x][z] - dist[y][z]
                kmax = prod2 // 2
                if kmax < 1:
                    continue
                for py in all_geodesics(g, x, y):
                    for pz in all_geodesics(g, x, z):
                        for k in range(1, kmax + 1):
                            best = max(best, dist[py[k]][pz[k]])
    return 2 * best


def brute_slim(g: Graph) -> int:
    """Doubled slim constant by explicit enumeration of geodesic triples."""
    gx = to_networkx(g)
    dist = dict(nx.all_pairs_shortest_path_length(gx))
    best = 0
    for x, y, z in itertools.combinations(range(g.n), 3):
        for (a, b, c) in ((x, y, z), (y, z, x), (z, x, y)):
            for pab in all_geodesics(g, a, b):
                for pac in all_geodesics(g, a, c):
                    for pbc in all_geodesics(g, b, c):
                        other = set(pac) | set(pbc)
                        for u in pab:
                            score = min(dist[u][w] for w in other)
                            best = max(best, score)
    return 2 * best


def brute_f_matrix(g: Graph, r: int):
    """Doubled max-min Gromov product closure over all vertex sequences."""
    gx = to_networkx(g)
    dist = dict(nx.all_pairs_shortest_path_length(gx))
    n = g.n
    W = [[dist[u][r] + dist[v][r] - dist[u][v] for v in range(n)] for u in range(n)]
    for u in range(n):
        W[u][u] = 2 * dist[u][r]
    for k in range(n):
        for i in range(n):
            wik = W[i][k]
            rowk = W[k]
            rowi = W[i]
            for j in range(n):
                cand = wik if wik < rowk[j] else rowk[j]
                if cand > rowi[j]:
                    rowi[j] = cand
    return W


def brute_demand(g: Graph):
    """Per-vertex demand by explicit shortest-path enumeration."""
    gx = to_networkx(g)
    demand = [Fraction(0)] * g.n
    for u in range(g.n):
        for v in range(u + 1, g.n):
            paths = [tuple(p) for p in nx.all_shortest_paths(gx, u, v)]
            for w in range(g.n):
                if w in (u, v):
                    continue
                through = sum(1 for p in paths if w in p)
                if through:
                    demand[w] += Fraction(through, len(paths))
    return demand


def brute_lambda(g: Graph) -> int:
    """Longest induced cycle by subset enumeration."""
    best = 0
    gx = to_networkx(g)
    for r in range(3, g.n + 1):
        for sub in itertools.combinations(range(g.n), r):
            sg = gx.subgraph(sub)
            if all(d == 2 for _, d in sg.degree()) and nx.is_connected(sg):
                best = max(best, r)
    return best


@pytest.fixture
def rng():
    return random.Random(12345)
