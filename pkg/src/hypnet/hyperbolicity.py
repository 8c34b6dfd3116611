"""Exact four-point / rooted hyperbolicity, thin and slim triangle constants.

All constants are exact half-integers.  The four-point scan comes in a
vectorized O(n^4) brute-force flavour (authoritative, with a lexicographically
smallest witness) and a pruned flavour that restricts the search to locally
maximal ("far-apart") diagonal pairs processed in decreasing distance order
with hard cutoffs; the two always agree on the value.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .geodesics import clearance_vector, dag_vertices
from .graphs import (
    DistanceMatrix,
    Graph,
    GraphError,
    HalfInt,
    all_pairs,
    connected_components_of_subset,
    diameter,
    induced_subgraph,
    is_connected_subset,
)


@dataclass(frozen=True)
class QuadrupleWitness:
    """A quadruple realizing a four-point value, with its three pairing sums.

    sums = (S1, S2, S3) with S1 = d(u1,u3)+d(u2,u4), S2 = d(u1,u4)+d(u2,u3),
    S3 = d(u1,u2)+d(u3,u4); delta_hat is half the gap between the largest and
    second largest.
    """

    vertices: tuple
    sums: tuple
    delta_hat: HalfInt


def _witness(dm: DistanceMatrix, a, b, c, d) -> QuadrupleWitness:
    D = dm.dist
    s1 = int(D[a, c] + D[b, d])
    s2 = int(D[a, d] + D[b, c])
    s3 = int(D[a, b] + D[c, d])
    top, mid, _ = sorted((s1, s2, s3), reverse=True)
    return QuadrupleWitness((a, b, c, d), (s1, s2, s3), HalfInt(top - mid))


def gromov_product(dm: DistanceMatrix, x: int, y: int, r: int) -> HalfInt:
    """(x.y)_r = (d(x,r) + d(y,r) - d(x,y)) / 2, exact."""
    D = dm.dist
    return HalfInt(int(D[x, r] + D[y, r] - D[x, y]))


def gromov_product_matrix(dm: DistanceMatrix, r: int) -> np.ndarray:
    """All Gromov products at root r, doubled (so entries are exact ints)."""
    D = dm.dist
    return (D[r][:, None] + D[r][None, :] - D).astype(np.int32)


def delta_at_root(dm: DistanceMatrix, r: int) -> HalfInt:
    """Smallest delta with (x.z)_r >= min((x.y)_r, (y.z)_r) - delta for all triples."""
    G = gromov_product_matrix(dm, r)
    best = 0
    for y in range(dm.n):
        row = G[y]
        defect = np.minimum(row[:, None], row[None, :]) - G
        m = int(defect.max())
        if m > best:
            best = m
    return HalfInt(max(best, 0))


def delta_rooted_extremes(dm: DistanceMatrix):
    """(min, max) of delta_at_root over all roots; max equals the four-point value."""
    values = [delta_at_root(dm, r) for r in range(dm.n)]
    return min(values), max(values)


def delta_four_point(dm: DistanceMatrix):
    """Exact four-point hyperbolicity by vectorized O(n^4) scan.

    Returns (delta, witness) where the witness is the lexicographically
    smallest sorted quadruple attaining the maximum; witness is None for
    n < 4 (delta is 0 there).
    """
    n = dm.n
    if n < 4:
        return HalfInt(0), None
    D = dm.dist.astype(np.int32)
    rows = np.arange(n)[:, None]
    cols = np.arange(n)[None, :]
    upper = cols > rows
    best = -1
    best_ab = None
    for a in range(n - 3):
        Da = D[a]
        for b in range(a + 1, n - 2):
            s2 = np.add.outer(Da, D[b])
            s3 = s2.T
            s1 = int(D[a, b]) + D
            mx = np.maximum(s1, np.maximum(s2, s3))
            mn = np.minimum(s1, np.minimum(s2, s3))
            val = 2 * mx + mn - s1 - s2 - s3
            block = np.where(upper & (rows > b), val, -1)
            m = int(block.max())
            if m > best:
                best = m
                best_ab = (a, b)
    a, b = best_ab
    s2 = np.add.outer(D[a], D[b])
    s1 = int(D[a, b]) + D
    s3 = s2.T
    mx = np.maximum(s1, np.maximum(s2, s3))
    mn = np.minimum(s1, np.minimum(s2, s3))
    val = 2 * mx + mn - s1 - s2 - s3
    hits = np.argwhere(upper & (rows > b) & (val == best))
    c, d = int(hits[0][0]), int(hits[0][1])
    return HalfInt(best), _witness(dm, a, b, c, d)


def far_apart_pairs(dm: DistanceMatrix) -> np.ndarray:
    """Boolean matrix of pairs that are local distance maxima at both ends.

    (u, v) qualifies iff no neighbour of u is farther from v and no neighbour
    of v is farther from u; some four-point maximizer always has both of its
    large-sum diagonals of this kind, which is what licenses the pruned scan.
    """
    D = dm.dist
    n = dm.n
    M = np.empty((n, n), dtype=D.dtype)
    for u in range(n):
        nbrs = np.nonzero(D[u] == 1)[0]
        M[u] = D[nbrs].max(axis=0)
    return (D >= M) & (D >= M.T) & (D > 0)


def delta_four_point_pruned(dm: DistanceMatrix, stats: dict | None = None):
    """Same value as :func:`delta_four_point`, via the far-apart pair scan.

    Candidate diagonals are far-apart pairs sorted by decreasing distance.
    Two exact cutoffs apply: a quadruple's value never exceeds its minimum
    pairwise distance, so once the inner (hence smaller) pair distance drops
    to the running best the rest of the row is hopeless, and once the outer
    pair distance drops there the whole scan is.  The witness is the first
    maximizer in this deterministic order (not necessarily the brute-force
    lexicographic one).
    """
    n = dm.n
    if n < 4:
        if stats is not None:
            stats["combos"] = 0
        return HalfInt(0), None
    fp = far_apart_pairs(dm)
    iu, ju = np.nonzero(np.triu(fp, 1))
    dvals = dm.dist[iu, ju].astype(np.int32)
    order = np.lexsort((ju, iu, -dvals))
    pa = iu[order].astype(np.int32)
    pb = ju[order].astype(np.int32)
    pd = dvals[order]
    npairs = len(pd)
    D = dm.dist
    best = 0
    witness = None
    combos = 0
    cut = npairs
    for i in range(npairs):
        di = int(pd[i])
        if 2 * di <= best:
            break
        if i + 1 >= cut:
            continue
        a, b = int(pa[i]), int(pb[i])
        cs = pa[i + 1 : cut]
        ds = pb[i + 1 : cut]
        s2 = D[a, cs] + D[b, ds]
        s3 = D[a, ds] + D[b, cs]
        val = di + pd[i + 1 : cut] - np.maximum(s2, s3)
        overlap = (cs == a) | (cs == b) | (ds == a) | (ds == b)
        val[overlap] = -1
        combos += len(val)
        m = int(val.max())
        if m > best:
            best = m
            j = int(np.argmax(val))
            witness = (a, int(cs[j]), b, int(ds[j]))
            # pairs are distance-sorted, so the cutoff index only moves left
            cut = int(np.searchsorted(-2 * pd, -best, side="right"))
    if stats is not None:
        stats["combos"] = combos
        stats["far_apart_pairs"] = npairs
    if witness is None:
        witness = (0, 1, 2, 3)
    return HalfInt(best), _witness(dm, *witness)


def _dag_level_table(dm: DistanceMatrix, x: int):
    """For a fixed apex x: per target y, DAG vertices of (x, y) grouped by level."""
    D = dm.dist
    n = dm.n
    table = []
    for y in range(n):
        if y == x:
            table.append(None)
            continue
        dxy = int(D[x, y])
        levels = [[] for _ in range(dxy + 1)]
        on = np.nonzero(D[x] + D[:, y] == dxy)[0]
        for v in on.tolist():
            levels[int(D[x, v])].append(v)
        table.append(levels)
    return table


def thin_triangles_constant(g: Graph, dm: DistanceMatrix) -> HalfInt:
    """Minimum delta such that every realized geodesic triangle is delta-thin.

    Worst case over all choices of shortest paths: for each apex x and legs
    y, z, points at equal distance k <= (y.z)_x along any x-y and any x-z
    geodesic must be within delta of each other, so the constant is the max
    of d(a, b) over same-level DAG vertices a, b up to the Gromov product.
    """
    n = dm.n
    D = dm.dist
    best = 0
    for x in range(n):
        table = _dag_level_table(dm, x)
        for y in range(n):
            if y == x:
                continue
            ly = table[y]
            dxy = int(D[x, y])
            for z in range(y + 1, n):
                if z == x:
                    continue
                kmax = (dxy + int(D[x, z]) - int(D[y, z])) // 2
                if kmax < 1:
                    continue
                lz = table[z]
                for k in range(1, kmax + 1):
                    A = ly[k]
                    B = lz[k]
                    if len(A) == 1 and len(B) == 1:
                        val = int(D[A[0], B[0]])
                    else:
                        val = int(D[np.ix_(A, B)].max())
                    if val > best:
                        best = val
    return HalfInt(2 * best)


def slim_triangles_constant(g: Graph, dm: DistanceMatrix) -> HalfInt:
    """Minimum delta such that every realized triangle is delta-slim.

    For u on a chosen x-y geodesic the adversary picks the other two sides;
    since they are chosen independently, the score of u is
    min(max-clearance of u from all x-z geodesics, same for y-z), computed by
    widest-path DP over the shortest-path DAGs.
    """
    n = dm.n
    clear = {}
    for x in range(n):
        for y in range(x + 1, n):
            clear[(x, y)] = clearance_vector(g, dm, x, y)
    best = 0
    for x in range(n):
        for y in range(x + 1, n):
            side = dag_vertices(dm, x, y)
            for z in range(n):
                if z == x or z == y:
                    continue
                wx = clear[(min(x, z), max(x, z))]
                wy = clear[(min(y, z), max(y, z))]
                val = int(np.minimum(wx[side], wy[side]).max())
                if val > best:
                    best = val
    return HalfInt(2 * best)


@dataclass(frozen=True)
class SeparatorBound:
    separator_diameter: int
    component_deltas: tuple
    bound: HalfInt


def separator_bound(g: Graph, dm: DistanceMatrix, B) -> SeparatorBound:
    """Compose a four-point bound from a separator: k + max over parts.

    B must separate the graph and G[B] must be connected (the bound's k is
    the diameter of G[B], which is undefined otherwise).  Each part is the
    component of G - B with B added back; the graph's four-point value is at
    most diam(G[B]) + max of the parts' values.
    """
    Bset = sorted(set(B))
    if not Bset:
        raise GraphError("separator must be non-empty")
    rest = [v for v in range(g.n) if v not in set(Bset)]
    comps = connected_components_of_subset(g, rest)
    if len(comps) < 2:
        raise GraphError("B does not separate the graph")
    if not is_connected_subset(g, Bset):
        raise GraphError("G[B] is disconnected; separator diameter undefined")
    if len(Bset) == 1:
        k = 0
    else:
        sub, _ = induced_subgraph(g, Bset)
        k = diameter(all_pairs(sub))[0]
    deltas = []
    for comp in comps:
        part, _ = induced_subgraph(g, comp + Bset)
        deltas.append(delta_four_point(all_pairs(part))[0])
    top = max(deltas)
    return SeparatorBound(k, tuple(deltas), HalfInt(2 * k + top.doubled))


def articulation_points(g: Graph):
    """Cut vertices via iterative lowpoint DFS."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    points = set()
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        stack = [(root, iter(g.adj[root]))]
        disc[root] = low[root] = timer
        timer += 1
        children = 0
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    parent[w] = v
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, iter(g.adj[w])))
                    advanced = True
                    break
                elif w != parent[v]:
                    low[v] = min(low[v], disc[w])
            if not advanced:
                stack.pop()
                if parent[v] != -1:
                    low[parent[v]] = min(low[parent[v]], low[v])
                    if parent[v] != root and low[v] >= disc[parent[v]]:
                        points.add(parent[v])
                    if parent[v] == root:
                        children += 1
        if children >= 2:
            points.add(root)
    return sorted(points)


def biconnected_blocks(g: Graph):
    """Blocks (maximal 2-connected subgraphs / bridges) as sorted vertex lists."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    timer = 0
    estack = []
    blocks = []

    def emit(until_edge):
        comp = set()
        while estack:
            e = estack.pop()
            comp.update(e)
            if e == until_edge:
                break
        if comp:
            blocks.append(sorted(comp))

    for root in range(n):
        if disc[root] != -1:
            continue
        stack = [(root, -1, iter(g.adj[root]))]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            v, pv, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    estack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(g.adj[w])))
                    advanced = True
                    break
                elif w != pv and disc[w] < disc[v]:
                    estack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if not advanced:
                stack.pop()
                if stack:
                    pw = stack[-1][0]
                    low[pw] = min(low[pw], low[v])
                    if low[v] >= disc[pw]:
                        emit((pw, v))
    return blocks


@dataclass(frozen=True)
class SimplicialHit:
    """A graph whose four-point value strictly drops when a simplicial vertex goes."""

    graph: Graph
    vertex: int
    delta_before: HalfInt
    delta_after: HalfInt


def simplicial_counterexample_search(n_max: int) -> SimplicialHit | None:
    """Search small graphs for a simplicial vertex whose removal lowers delta.

    Such graphs refute the clique-separator trimming heuristic for exact
    hyperbolicity.  Enumeration is by vertex count then edge bitmask, so the
    result is deterministic; the smallest hit is the 4-clique minus an edge.
    """
    if n_max < 4:
        return None
    for n in range(4, min(n_max, 6) + 1):
        pairs = list(itertools.combinations(range(n), 2))
        for mask in range(1, 1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
            if len(edges) < n - 1:
                continue
            adj = [[] for _ in range(n)]
            for u, v in edges:
                adj[u].append(v)
                adj[v].append(u)
            if any(not a for a in adj):
                continue
            g = Graph(n, adj)
            if not is_connected_subset(g, range(n)):
                continue
            dm = all_pairs(g)
            delta, _ = delta_four_point(dm)
            if delta.doubled == 0:
                continue
            for z in range(n):
                nz = g.adj[z]
                if len(nz) < 2:
                    continue
                if not all(g.has_edge(u, v) for u, v in itertools.combinations(nz, 2)):
                    continue
                rest = [v for v in range(n) if v != z]
                if not is_connected_subset(g, rest):
                    continue
                sub, _ = induced_subgraph(g, rest)
                d2, _ = delta_four_point(all_pairs(sub))
                if d2 < delta:
                    return SimplicialHit(g, z, delta, d2)
    return None


@dataclass(frozen=True)
class HyperbolicityReport:
    delta_four_point: HalfInt
    witness: QuadrupleWitness | None
    delta_rooted_min: HalfInt | None
    delta_rooted_max: HalfInt | None
    thin: HalfInt | None
    slim: HalfInt | None
    diameter: int


def hyperbolicity_report(
    g: Graph,
    dm: DistanceMatrix,
    method: str = "pruned",
    rooted_limit: int = 150,
    triangle_limit: int = 80,
) -> HyperbolicityReport:
    """One-stop report; expensive extras are skipped above the size limits."""
    if method == "exact":
        delta, wit = delta_four_point(dm)
    elif method == "pruned":
        delta, wit = delta_four_point_pruned(dm)
    elif method == "rooted":
        delta, wit = delta_four_point_pruned(dm)
    else:
        raise GraphError(f"unknown method {method!r}")
    rooted_min = rooted_max = None
    if method == "rooted" or dm.n <= rooted_limit:
        rooted_min, rooted_max = delta_rooted_extremes(dm)
    thin = slim = None
    if dm.n <= triangle_limit:
        thin = thin_triangles_constant(g, dm)
        slim = slim_triangles_constant(g, dm)
    return HyperbolicityReport(
        delta, wit, rooted_min, rooted_max, thin, slim, diameter(dm)[0]
    )
