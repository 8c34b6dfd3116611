"""Deterministic constructors for the graph families used across the test bed.

Each generator returns a plain :class:`~hypnet.graphs.Graph`; identical
parameters (and seed, for the randomized disk growth) always produce an
identical edge list.
"""

from __future__ import annotations

import random

from .graphs import Graph, GraphError, _adj_from_pairs


def _graph(n, pairs) -> Graph:
    return Graph(n, _adj_from_pairs(n, sorted(set(pairs))))


def path(n: int) -> Graph:
    """Path on n vertices."""
    if n < 1:
        raise GraphError("path needs n >= 1")
    return _graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    """Cycle on n vertices."""
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return _graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    """Complete graph K_n."""
    if n < 1:
        raise GraphError("complete needs n >= 1")
    return _graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(n: int) -> Graph:
    """Star K_{1,n}: hub 0 plus n leaves."""
    if n < 1:
        raise GraphError("star needs n >= 1 leaves")
    return _graph(n + 1, [(0, i) for i in range(1, n + 1)])


def grid(m: int, n: int) -> Graph:
    """m x n rectangular lattice; vertex (i, j) is i * n + j."""
    if m < 1 or n < 1:
        raise GraphError("grid needs m, n >= 1")
    pairs = []
    for i in range(m):
        for j in range(n):
            v = i * n + j
            if j + 1 < n:
                pairs.append((v, v + 1))
            if i + 1 < m:
                pairs.append((v, v + n))
    return _graph(m * n, pairs)


def ringed_tree(levels: int) -> Graph:
    """Complete binary tree of the given depth with every level closed into a ring.

    Level i holds vertices 2^i - 1 .. 2^(i+1) - 2 in left-to-right tree order;
    consecutive level-mates are joined, including the wraparound edge, on top
    of the tree edges (so the two level-1 vertices get a ring edge even though
    they are already siblings of the hub).
    """
    if levels < 1:
        raise GraphError("ringed_tree needs levels >= 1")
    pairs = []
    n = 2 ** (levels + 1) - 1
    for v in range(1, n):
        pairs.append(((v - 1) // 2, v))
    for i in range(1, levels + 1):
        first = 2**i - 1
        size = 2**i
        for j in range(size):
            a = first + j
            b = first + (j + 1) % size
            if a != b:
                pairs.append((min(a, b), max(a, b)))
    return _graph(n, pairs)


def cartesian_cycle_path(ell: int, length: int) -> Graph:
    """Cartesian product C_ell x P_length; vertex (a, b) is a * length + b."""
    if ell < 3 or length < 1:
        raise GraphError("cartesian_cycle_path needs ell >= 3, length >= 1")
    pairs = []
    for a in range(ell):
        for b in range(length):
            v = a * length + b
            if b + 1 < length:
                pairs.append((v, v + 1))
            a2 = (a + 1) % ell
            if a2 != a:
                pairs.append((v, a2 * length + b))
    return _graph(ell * length, pairs)


def lexicographic_cycle_clique(k: int, kp: int) -> Graph:
    """Cycle-of-cliques product: (i,j) ~ (i',j') iff i=i' (j != j') or i,i' cyclically adjacent and j=j'.

    The cyclic wraparound is included so the graph is vertex-transitive (a
    rotation composed with any permutation of clique coordinates is an
    automorphism); with kp = 1 this is just C_k.
    """
    if k < 3 or kp < 1:
        raise GraphError("lexicographic_cycle_clique needs k >= 3, kp >= 1")
    pairs = []
    for i in range(k):
        for j in range(kp):
            v = i * kp + j
            for j2 in range(j + 1, kp):
                pairs.append((v, i * kp + j2))
            i2 = (i + 1) % k
            if i2 != i:
                pairs.append((v, i2 * kp + j))
    return _graph(k * kp, pairs)


def subdivision(g: Graph, k: int) -> Graph:
    """Replace every edge by a path of length k; k = 1 returns a copy."""
    if k < 1:
        raise GraphError("subdivision needs k >= 1")
    pairs = []
    nxt = g.n
    for u, v in g.edges():
        prev = u
        for _ in range(k - 1):
            pairs.append((prev, nxt))
            prev = nxt
            nxt += 1
        pairs.append((prev, v))
    return _graph(nxt, pairs)


def broom(k: int, ell: int) -> Graph:
    """Broom tree: hub 0 with k leaves 1..k and a handle path of ell vertices."""
    if k < 1 or ell < 1:
        raise GraphError("broom needs k, ell >= 1")
    pairs = [(0, i) for i in range(1, k + 1)]
    prev = 0
    for j in range(k + 1, k + ell + 1):
        pairs.append((prev, j))
        prev = j
    return _graph(k + ell + 1, pairs)


def chord_cycle(n: int) -> Graph:
    """Circulant on 0..n-1 with chords at every power-of-two offset."""
    if n < 2:
        raise GraphError("chord_cycle needs n >= 2")
    pairs = []
    for i in range(n):
        for j in range(i + 1, n):
            gap = j - i
            if _is_pow2(gap) or _is_pow2(n - gap):
                pairs.append((i, j))
    return _graph(n, pairs)


def _is_pow2(x: int) -> bool:
    return x >= 1 and (x & (x - 1)) == 0


def y_graph(h: int, k: int) -> Graph:
    """Y-shaped lattice: three width-h strips of lengths k, k and 3k glued on an h x h base.

    The base occupies columns/rows [0, h); the two short legs extend in +y and
    -y, the long leg in +x.  Vertex ids follow sorted (x, y) coordinates.
    """
    if h < 1 or k < 1:
        raise GraphError("y_graph needs h, k >= 1")
    cells = set()
    for x in range(h):
        for y in range(h):
            cells.add((x, y))
    for x in range(h):
        for y in range(h, h + k):
            cells.add((x, y))
        for y in range(-k, 0):
            cells.add((x, y))
    for x in range(h, h + 3 * k):
        for y in range(h):
            cells.add((x, y))
    order = sorted(cells)
    index = {c: i for i, c in enumerate(order)}
    pairs = []
    for (x, y), i in index.items():
        for nb in ((x + 1, y), (x, y + 1)):
            if nb in index:
                pairs.append((i, index[nb]))
    return _graph(len(order), pairs)


def y_graph_coords(h: int, k: int):
    """(x, y) coordinate list matching :func:`y_graph` vertex ids."""
    g = y_graph(h, k)
    cells = set()
    for x in range(h):
        for y in range(h):
            cells.add((x, y))
    for x in range(h):
        for y in range(h, h + k):
            cells.add((x, y))
        for y in range(-k, 0):
            cells.add((x, y))
    for x in range(h, h + 3 * k):
        for y in range(h):
            cells.add((x, y))
    assert len(cells) == g.n
    return sorted(cells)


def two_clique_block(size: int = 4) -> Graph:
    """Two cliques of the given size sharing a single cut vertex (vertex 0)."""
    if size < 2:
        raise GraphError("two_clique_block needs size >= 2")
    pairs = []
    first = list(range(size))
    second = [0] + list(range(size, 2 * size - 1))
    for block in (first, second):
        for a in range(len(block)):
            for b in range(a + 1, len(block)):
                pairs.append((block[a], block[b]))
    return _graph(2 * size - 1, pairs)


def triangulation_growth(d: int, steps: int, seed: int = 0):
    """Grow a triangulated disk toward d-regularity by repeated boundary fans.

    Starting from a triangle, each step picks a boundary vertex w (highest
    degree first, ties broken by the seeded rng), adds d - deg(w) fan vertices
    in the outer gap between w's two boundary neighbours and retires w to the
    interior at degree exactly d.  Every boundary vertex keeps at least two
    boundary neighbours throughout, so growth can continue indefinitely.

    Rotations are maintained counterclockwise with the boundary ring listed
    counterclockwise as well; for every boundary vertex its ring predecessor
    is cyclically followed by its ring successor in the rotation (the outer
    face fills that angular gap).

    Returns an :class:`~hypnet.curvature.EmbeddedGraph` with the rotation
    system accumulated during growth.
    """
    from .curvature import EmbeddedGraph

    if d < 3:
        raise GraphError("triangulation_growth needs d >= 3")
    rng = random.Random(seed)
    rot = {0: [1, 2], 1: [2, 0], 2: [0, 1]}
    boundary = [0, 1, 2]

    def close_vertex(w):
        # retire w by sealing its outer gap with the edge u1-u2
        bi = boundary.index(w)
        u1 = boundary[(bi - 1) % len(boundary)]
        u2 = boundary[(bi + 1) % len(boundary)]
        rot[u1].insert(rot[u1].index(w), u2)
        rot[u2].insert(rot[u2].index(w) + 1, u1)
        boundary.pop(bi)

    def close_saturated():
        while len(boundary) > 3:
            sat = sorted(v for v in boundary if len(rot[v]) >= d)
            if not sat:
                return
            close_vertex(sat[0])

    for _ in range(steps):
        close_saturated()
        candidates = [v for v in boundary if len(rot[v]) < d]
        if not candidates:
            break
        top = max(len(rot[v]) for v in candidates)
        w = rng.choice(sorted(v for v in candidates if len(rot[v]) == top))
        bi = boundary.index(w)
        u1 = boundary[(bi - 1) % len(boundary)]
        u2 = boundary[(bi + 1) % len(boundary)]
        k = d - len(rot[w])
        base = len(rot)
        new = list(range(base, base + k))
        chain = [u1] + new + [u2]
        iw = rot[w].index(u1)
        rot[w][iw + 1:iw + 1] = new
        for pos, v in enumerate(new, start=1):
            rot[v] = [chain[pos + 1], w, chain[pos - 1]]
        rot[u1].insert(rot[u1].index(w), chain[1])
        rot[u2].insert(rot[u2].index(w) + 1, chain[-2])
        boundary[bi:bi + 1] = new
    close_saturated()
    n = len(rot)
    adj = [sorted(rot[v]) for v in range(n)]
    g = Graph(n, adj)
    return EmbeddedGraph(g, {v: tuple(rot[v]) for v in range(n)})
