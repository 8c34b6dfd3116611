"""Immutable unweighted graphs, exact all-pairs distances and shortest-path counts.

Everything downstream (hyperbolicity, layering trees, demand, ...) consumes the
two types defined here.  Distances are plain hop counts; shortest-path counts
are arbitrary-precision integers because they grow combinatorially (the corner
pair of a 10x10 grid already has ~4.8e4 geodesics).
"""

from __future__ import annotations

import warnings
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .util import parallel_map


class GraphError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class HalfInt:
    """Exact half-integer scalar, stored as twice its value.

    All hyperbolicity constants, Gromov products, bottleneck values and tree
    edge weights in this toolkit are exact multiples of 1/2; this type keeps
    them lossless end to end.
    """

    doubled: int

    @classmethod
    def from_int(cls, k: int) -> "HalfInt":
        return cls(2 * k)

    @property
    def is_integer(self) -> bool:
        return self.doubled % 2 == 0

    def as_fraction(self) -> Fraction:
        return Fraction(self.doubled, 2)

    def __float__(self) -> float:
        return self.doubled / 2.0

    def __add__(self, other):
        if isinstance(other, HalfInt):
            return HalfInt(self.doubled + other.doubled)
        if isinstance(other, int):
            return HalfInt(self.doubled + 2 * other)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, HalfInt):
            return HalfInt(self.doubled - other.doubled)
        if isinstance(other, int):
            return HalfInt(self.doubled - 2 * other)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, int):
            return HalfInt(self.doubled * other)
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self):
        return HalfInt(-self.doubled)

    def __str__(self) -> str:
        if self.doubled % 2 == 0:
            return str(self.doubled // 2)
        return f"{self.doubled}/2"

    def __repr__(self) -> str:
        return f"HalfInt({self})"


HALF = HalfInt(1)
ZERO = HalfInt(0)


class Graph:
    """Simple connected unweighted graph with dense 0..n-1 vertex indices.

    Instances are immutable after construction and safe to share across
    threads.  ``labels`` maps internal indices back to the caller's vertex
    names when the graph was built from an edge list.
    """

    __slots__ = ("n", "adj", "labels", "faces")

    def __init__(self, n, adj, labels=None, faces=None):
        self.n = n
        self.adj = tuple(tuple(sorted(nb)) for nb in adj)
        self.labels = tuple(labels) if labels is not None else None
        self.faces = tuple(tuple(f) for f in faces) if faces is not None else None

    def edges(self):
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def adjacency_matrix(self) -> np.ndarray:
        A = np.zeros((self.n, self.n), dtype=bool)
        for u, v in self.edges():
            A[u, v] = A[v, u] = True
        return A

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def _adj_from_pairs(n, pairs):
    adj = [[] for _ in range(n)]
    for u, v in pairs:
        adj[u].append(v)
        adj[v].append(u)
    return adj


def build_graph(edge_list, labels_required=False) -> Graph:
    """Build a dense, connected, simple graph from (label, label) pairs.

    Labels are non-negative integers and get reindexed to 0..n-1 in sorted
    order; the mapping is kept on ``Graph.labels``.  Self-loops raise,
    duplicate edges are dropped with a warning, disconnected input raises
    (use :func:`build_components` to split instead).
    """
    seen = set()
    verts = set()
    for u, v in edge_list:
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if u < 0 or v < 0:
            raise GraphError("vertex labels must be non-negative")
        verts.add(u)
        verts.add(v)
        e = (u, v) if u < v else (v, u)
        if e in seen:
            warnings.warn(f"duplicate edge {e} dropped", stacklevel=2)
        seen.add(e)
    if not verts:
        raise GraphError("empty edge list")
    labels = sorted(verts)
    index = {lab: i for i, lab in enumerate(labels)}
    pairs = [(index[u], index[v]) for u, v in seen]
    g = Graph(len(labels), _adj_from_pairs(len(labels), pairs), labels=labels)
    if not _connected(g):
        raise GraphError("graph is disconnected; use build_components to split")
    return g


def build_components(edge_list):
    """Like :func:`build_graph` but splits disconnected input, largest first."""
    seen = set()
    for u, v in edge_list:
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        seen.add((u, v) if u < v else (v, u))
    adj = {}
    for u, v in seen:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    remaining = set(adj)
    comps = []
    while remaining:
        s = next(iter(remaining))
        comp = {s}
        stack = [s]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        remaining -= comp
        comps.append(comp)
    comps.sort(key=lambda c: (-len(c), min(c)))
    out = []
    for comp in comps:
        sub = [(u, v) for (u, v) in seen if u in comp]
        out.append(build_graph(sub))
    return out


def _connected(g: Graph) -> bool:
    seen = bytearray(g.n)
    seen[0] = 1
    stack = [0]
    count = 1
    while stack:
        u = stack.pop()
        for w in g.adj[u]:
            if not seen[w]:
                seen[w] = 1
                count += 1
                stack.append(w)
    return count == g.n


def bfs_row(adj, n, s):
    """Single-source hop distances and shortest-path counts (exact ints)."""
    dist = [-1] * n
    sigma = [0] * n
    dist[s] = 0
    sigma[s] = 1
    frontier = [s]
    d = 0
    while frontier:
        nxt = []
        d += 1
        for u in frontier:
            su = sigma[u]
            for w in adj[u]:
                dw = dist[w]
                if dw < 0:
                    dist[w] = d
                    nxt.append(w)
                    sigma[w] = su
                elif dw == d:
                    sigma[w] += su
        frontier = nxt
    return dist, sigma


def _apsp_chunk(args):
    adj, n, sources = args
    return [bfs_row(adj, n, s) for s in sources]


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop distances plus per-pair shortest-path counts.

    ``dist`` is an int32 array with the write flag cleared; ``sigma`` is a
    list of per-source lists of Python ints.
    """

    dist: np.ndarray
    sigma: list

    @property
    def n(self) -> int:
        return self.dist.shape[0]

    def d(self, u: int, v: int) -> int:
        return int(self.dist[u, v])

    def paths(self, u: int, v: int) -> int:
        return self.sigma[u][v]


def all_pairs(g: Graph, workers: int | None = None) -> DistanceMatrix:
    """Exact APSP by one BFS per source; deterministic regardless of workers."""
    n = g.n
    sources = list(range(n))
    if workers and workers > 1 and n >= 256:
        chunks = [sources[i::workers] for i in range(workers)]
        results = parallel_map(_apsp_chunk, [(g.adj, n, c) for c in chunks], workers)
        rows = [None] * n
        for chunk, res in zip(chunks, results):
            for s, row in zip(chunk, res):
                rows[s] = row
    else:
        rows = [bfs_row(g.adj, n, s) for s in sources]
    dist = np.empty((n, n), dtype=np.int32)
    sigma = []
    for s, (drow, srow) in enumerate(rows):
        if min(drow) < 0:
            raise GraphError("graph is disconnected")
        dist[s] = drow
        sigma.append(srow)
    dist.setflags(write=False)
    return DistanceMatrix(dist, sigma)


def diameter(dm: DistanceMatrix):
    """Diameter together with the lexicographically smallest diametral pair."""
    d = int(dm.dist.max())
    us, vs = np.nonzero(dm.dist == d)
    # rows come back sorted; first entry with u < v is the lex-smallest pair
    for u, v in zip(us.tolist(), vs.tolist()):
        if u < v:
            return d, (u, v)
    return 0, (0, 0)


def count_paths_through(dm: DistanceMatrix, u: int, v: int, w: int) -> Fraction:
    """Fraction of u-v geodesics through w; endpoints count as used."""
    if u == v:
        raise GraphError("count_paths_through requires u != v")
    if w == u or w == v:
        return Fraction(1)
    if dm.d(u, w) + dm.d(w, v) != dm.d(u, v):
        return Fraction(0)
    return Fraction(dm.sigma[u][w] * dm.sigma[w][v], dm.sigma[u][v])


def induced_subgraph(g: Graph, vertices):
    """Induced subgraph on ``vertices``; returns (subgraph, old index list)."""
    keep = sorted(set(vertices))
    index = {v: i for i, v in enumerate(keep)}
    pairs = []
    for u in keep:
        for w in g.adj[u]:
            if w > u and w in index:
                pairs.append((index[u], index[w]))
    adj = _adj_from_pairs(len(keep), pairs)
    return Graph(len(keep), adj), keep


def is_connected_subset(g: Graph, vertices) -> bool:
    verts = set(vertices)
    if not verts:
        return True
    s = next(iter(verts))
    seen = {s}
    stack = [s]
    while stack:
        u = stack.pop()
        for w in g.adj[u]:
            if w in verts and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(verts)


def connected_components_of_subset(g: Graph, vertices):
    """Components (as sorted lists) of the subgraph induced on ``vertices``."""
    verts = set(vertices)
    comps = []
    while verts:
        s = min(verts)
        comp = {s}
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if w in verts and w not in comp:
                    comp.add(w)
                    stack.append(w)
        verts -= comp
        comps.append(sorted(comp))
    comps.sort(key=lambda c: c[0])
    return comps


def read_edge_list(text: str) -> Graph:
    """Parse the one-edge-per-line format; '#' starts a comment line."""
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected two tokens, got {len(parts)}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise GraphError(f"line {lineno}: non-integer vertex label") from exc
        edges.append((u, v))
    return build_graph(edges)


def write_edge_list(g: Graph) -> str:
    """Canonical sorted edge-list text for ``g`` (external labels if present)."""
    lab = g.labels if g.labels is not None else tuple(range(g.n))
    lines = sorted((min(lab[u], lab[v]), max(lab[u], lab[v])) for u, v in g.edges())
    return "".join(f"{u} {v}\n" for u, v in lines)
