"""Implicit geodesic enumeration via shortest-path DAG membership.

A vertex v lies on some x-y geodesic iff d(x,v) + d(v,y) = d(x,y); walking
that DAG enumerates, bounds, or avoids geodesics without ever listing the
(often exponentially many) paths explicitly, except where a caller really
asks for the paths themselves.
"""

from __future__ import annotations

import numpy as np


def dag_vertices(dm, x: int, y: int) -> np.ndarray:
    """Vertices lying on at least one x-y geodesic, ascending by index."""
    D = dm.dist
    return np.nonzero(D[x] + D[:, y] == D[x, y])[0]


def dag_levels(dm, x: int, y: int):
    """(verts, levels) with levels = distance from x, both ascending by level."""
    D = dm.dist
    verts = dag_vertices(dm, x, y)
    lev = D[x][verts]
    order = np.argsort(lev, kind="stable")
    return verts[order], lev[order]


def canonical_geodesic(g, dm, x: int, y: int):
    """Lexicographically smallest x-y geodesic (greedy smallest next vertex)."""
    D = dm.dist
    path = [x]
    cur = x
    while cur != y:
        for w in g.adj[cur]:
            if D[x, w] == D[x, cur] + 1 and D[w, y] == D[cur, y] - 1:
                path.append(w)
                cur = w
                break
    return tuple(path)


def enumerate_geodesics(g, dm, x: int, y: int, cap: int):
    """Up to ``cap`` x-y geodesics in lexicographic order, plus a truncation flag."""
    D = dm.dist
    total = dm.sigma[x][y]
    paths = []
    stack = [(x, (x,))]
    while stack and len(paths) < cap:
        cur, path = stack.pop()
        if cur == y:
            paths.append(path)
            continue
        succs = [
            w
            for w in g.adj[cur]
            if D[x, w] == D[x, cur] + 1 and D[w, y] == D[cur, y] - 1
        ]
        for w in reversed(succs):
            stack.append((w, path + (w,)))
    return paths, total > len(paths)


def clearance_vector(g, dm, x: int, y: int) -> np.ndarray:
    """For every z: the largest clearance an x-y geodesic can keep from z.

    Entry z equals max over x-y geodesics P of min over w on P of d(z, w);
    computed as a widest-path DP over the shortest-path DAG, vectorized over
    all z at once.
    """
    D = dm.dist
    verts, lev = dag_levels(dm, x, y)
    W = {int(verts[0]): D[:, x].astype(np.int32)}
    idx = 1
    dxy = int(D[x, y])
    for t in range(1, dxy + 1):
        while idx < len(verts) and lev[idx] == t:
            v = int(verts[idx])
            preds = [W[u] for u in g.adj[v] if u in W and D[x, u] == t - 1]
            best = preds[0] if len(preds) == 1 else np.maximum.reduce(preds)
            W[v] = np.minimum(D[:, v].astype(np.int32), best)
            idx += 1
        # drop exhausted levels to keep memory flat on long DAGs
        if t >= 2:
            for u in [u for u in W if D[x, u] == t - 2]:
                if u != y:
                    del W[u]
    return W[y]


def reach_on_geodesics(g, dm, x: int, allowed) -> np.ndarray:
    """reach[y] is True iff some x-y geodesic stays inside ``allowed`` entirely.

    ``allowed`` is a boolean mask over vertices (endpoints included in the
    requirement).
    """
    D = dm.dist
    n = dm.n
    order = np.argsort(D[x], kind="stable")
    reach = np.zeros(n, dtype=bool)
    reach[x] = bool(allowed[x])
    Drow = D[x]
    for v in order.tolist()[1:]:
        if not allowed[v]:
            continue
        dv = Drow[v]
        for u in g.adj[v]:
            if Drow[u] == dv - 1 and reach[u]:
                reach[v] = True
                break
    return reach
