"""Distance-approximating (layering) trees with Steiner points.

The construction quotients each BFS shell of the root by "connected strictly
above or through higher shells" (two same-shell vertices that are merely
adjacent stay distinct), then stitches shells together: a plain class hangs
off its parent class by a weight-1 edge, while classes of one shell that are
joined by shell-internal edges share a Steiner point at the half level below
them, reached by weight-1/2 edges.  The resulting tree metric never expands
graph distances, and the shrinkage is controlled by the root's hyperbolicity.

The bottleneck function underlying the quotient is also exposed directly:
f(x, y) is the best achievable minimum Gromov product along a walk from x to
y, computable as a maximum-bottleneck path over graph edges scored by
min(level(u), level(v)) with a half-unit penalty for flat steps.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .graphs import DistanceMatrix, Graph, GraphError, HalfInt, diameter


class _DSU:
    __slots__ = ("parent", "size")

    def __init__(self, n):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x):
        p = self.parent
        root = x
        while p[root] != root:
            root = p[root]
        while p[x] != root:
            p[x], x = root, p[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return ra
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return ra


def _edge_scores(dm: DistanceMatrix, r: int):
    """Edges with doubled bottleneck scores level(u)+level(v)-1, sorted descending."""
    lev = dm.dist[r]
    iu, ju = np.nonzero(np.triu(dm.dist == 1, 1))
    scores = lev[iu] + lev[ju] - 1
    order = np.lexsort((ju, iu, -scores))
    return [(int(scores[t]), int(iu[t]), int(ju[t])) for t in order]


def f_matrix(dm: DistanceMatrix, r: int) -> np.ndarray:
    """Doubled f(x, y) for all pairs against root r.

    Kruskal-style: process edges by descending score with union-find; when two
    components join, every cross pair receives the current score.  Diagonal
    entries carry f(x, x) = level(x).
    """
    n = dm.n
    lev = dm.dist[r]
    F = np.zeros((n, n), dtype=np.int32)
    np.fill_diagonal(F, (2 * lev).astype(np.int32))
    dsu = _DSU(n)
    members = [[v] for v in range(n)]
    for score, u, v in _edge_scores(dm, r):
        ru, rv = dsu.find(u), dsu.find(v)
        if ru == rv:
            continue
        if len(members[ru]) < len(members[rv]):
            ru, rv = rv, ru
        big, small = members[ru], members[rv]
        idx = np.array(small)
        jdx = np.array(big)
        F[np.ix_(idx, jdx)] = score
        F[np.ix_(jdx, idx)] = score
        root = dsu.union(ru, rv)
        members[root] = big + small
        if root == ru:
            members[rv] = []
        else:
            members[ru] = []
    F.setflags(write=False)
    return F


def f_value(dm: DistanceMatrix, r: int, x: int, y: int) -> HalfInt:
    """Best achievable minimum Gromov product over walks from x to y."""
    return HalfInt(int(f_matrix(dm, r)[x, y]))


def d_prime_matrix(dm: DistanceMatrix, r: int) -> np.ndarray:
    """Doubled d'(x, y) = d(x,r) + d(y,r) - 2 f(x,y) for all pairs."""
    lev = dm.dist[r].astype(np.int64)
    F = f_matrix(dm, r)
    return (2 * (lev[:, None] + lev[None, :]) - 2 * F.astype(np.int64)).astype(np.int32)


def d_prime(dm: DistanceMatrix, r: int, x: int, y: int) -> HalfInt:
    return HalfInt(int(d_prime_matrix(dm, r)[x, y]))


@dataclass(frozen=True)
class LayeringTree:
    """Weighted tree over shell classes and Steiner points.

    Node arrays are parallel: ``kind`` is 'class' or 'steiner', ``level2`` the
    doubled distance from the tree root, ``parent`` the parent node id (-1 at
    the root) and ``weight2`` the doubled weight of the parent edge (2 or 1).
    ``members`` lists the graph vertices mapped to each class node and
    ``vmap`` sends every graph vertex to its node.
    """

    root: int
    kind: tuple
    level2: tuple
    parent: tuple
    weight2: tuple
    members: tuple
    vmap: tuple

    @property
    def n_nodes(self) -> int:
        return len(self.kind)

    def node_level(self, i: int) -> HalfInt:
        return HalfInt(self.level2[i])

    def node_distance(self, i: int, j: int) -> HalfInt:
        """Tree distance between nodes; edge weights equal level differences."""
        li, lj = self.level2[i], self.level2[j]
        total = li + lj
        while i != j:
            if self.level2[i] >= self.level2[j]:
                i = self.parent[i]
            else:
                j = self.parent[j]
        return HalfInt(total - 2 * self.level2[i])

    def steiner_nodes(self):
        return [i for i, k in enumerate(self.kind) if k == "steiner"]

    def class_nodes(self):
        return [i for i, k in enumerate(self.kind) if k == "class"]

    def merged_shell_classes(self):
        """Coarser per-shell classes where shell-internal adjacency also merges.

        These are the unions of class nodes hanging off a common Steiner point
        (plus the untouched classes); they coincide with connectivity through
        all vertices at or above the shell.
        """
        groups = {}
        for i in self.class_nodes():
            p = self.parent[i]
            key = p if (p >= 0 and self.kind[p] == "steiner") else i
            groups.setdefault(key, []).extend(self.members[i])
        return sorted((sorted(vs) for vs in groups.values()), key=lambda c: c[0])


def tree_distance(t: LayeringTree, x: int, y: int) -> HalfInt:
    """d_T between the images of two graph vertices."""
    return t.node_distance(t.vmap[x], t.vmap[y])


def default_root(dm: DistanceMatrix) -> int:
    """First endpoint of the lexicographically smallest diametral pair."""
    return diameter(dm)[1][0]


def layering_tree(g: Graph, dm: DistanceMatrix, r: int) -> LayeringTree:
    """Build the distance-approximating tree rooted at r in near-linear time.

    Shells are processed top-down with a union-find over everything strictly
    above the current shell; a shell vertex joins the components of its
    upper neighbours, and two shell vertices land in one class exactly when
    those components meet.  Shell-internal edges never merge classes; instead
    they define the auxiliary graph whose nontrivial components receive
    Steiner points.
    """
    n = g.n
    lev = dm.dist[r].astype(int).tolist()
    maxlev = max(lev)
    shells = [[] for _ in range(maxlev + 1)]
    for v in range(n):
        shells[lev[v]].append(v)

    dsu = _DSU(n)  # components of the processed suffix (levels > current)
    class_of = [-1] * n  # vertex -> class index within its own shell pass
    class_members = {}  # (level, local id) -> member list
    class_list_per_level = {}
    hcomp_of_class = {}
    next_class = 0

    for k in range(maxlev, 0, -1):
        shell = shells[k]
        local = {}
        lsu = _DSU(len(shell) + n)  # shell slots first, then room for reps
        rep_slot = {}
        slots = len(shell)
        for i, x in enumerate(shell):
            local[x] = i
        for i, x in enumerate(shell):
            for w in g.adj[x]:
                if lev[w] == k + 1:
                    rep = dsu.find(w)
                    if rep not in rep_slot:
                        rep_slot[rep] = slots
                        slots += 1
                    lsu.union(i, rep_slot[rep])
        groups = {}
        for i, x in enumerate(shell):
            groups.setdefault(lsu.find(i), []).append(x)
        classes = sorted(groups.values(), key=lambda ms: ms[0])
        ids = []
        for ms in classes:
            cid = next_class
            next_class += 1
            for x in ms:
                class_of[x] = cid
            class_members[cid] = ms
            ids.append(cid)
        class_list_per_level[k] = ids
        # Steiner grouping: shell-internal edges between distinct classes.
        # A component with two or more classes necessarily contains an edge.
        hsu = _DSU(len(ids))
        pos = {cid: t for t, cid in enumerate(ids)}
        for x in shell:
            for w in g.adj[x]:
                if lev[w] == k and w > x and class_of[w] != class_of[x]:
                    hsu.union(pos[class_of[x]], pos[class_of[w]])
        hgroups = {}
        for t, cid in enumerate(ids):
            hgroups.setdefault(hsu.find(t), []).append(cid)
        for cids in hgroups.values():
            merged = len(cids) > 1
            for cid in cids:
                hcomp_of_class[cid] = (k, min(cids)) if merged else None
        # fold the shell into the suffix union-find for the next iteration
        for x in shell:
            for w in g.adj[x]:
                if lev[w] > k or (lev[w] == k and w > x):
                    dsu.union(x, w)

    # root class
    root_cid = next_class
    class_members[root_cid] = [r]
    class_of[r] = root_cid
    class_list_per_level[0] = [root_cid]

    # assemble nodes bottom-up by level, classes then steiner points
    kind, level2, parent, weight2, members = [], [], [], [], []
    node_of_class = {}
    steiner_nodes = {}

    def add_node(knd, lv2, par, w2, ms):
        kind.append(knd)
        level2.append(lv2)
        parent.append(par)
        weight2.append(w2)
        members.append(tuple(ms))
        return len(kind) - 1

    add_node("class", 0, -1, 0, [r])
    node_of_class[root_cid] = 0
    for k in range(1, maxlev + 1):
        for cid in class_list_per_level[k]:
            ms = class_members[cid]
            x = ms[0]
            p = next(w for w in g.adj[x] if lev[w] == k - 1)
            parent_node = node_of_class[class_of[p]]
            group = hcomp_of_class.get(cid)
            if group is None:
                node_of_class[cid] = add_node("class", 2 * k, parent_node, 2, ms)
            else:
                if group not in steiner_nodes:
                    steiner_nodes[group] = add_node(
                        "steiner", 2 * k - 1, parent_node, 1, []
                    )
                s = steiner_nodes[group]
                node_of_class[cid] = add_node("class", 2 * k, s, 1, ms)

    vmap = [node_of_class[class_of[v]] for v in range(n)]
    return LayeringTree(
        r,
        tuple(kind),
        tuple(level2),
        tuple(parent),
        tuple(weight2),
        tuple(members),
        tuple(vmap),
    )


@dataclass(frozen=True)
class TreeQuality:
    D: int
    eps_max: HalfInt
    distortion_bound: Fraction | None
    bound_2dlog: float | None


def tree_quality(g: Graph, dm: DistanceMatrix, t: LayeringTree, delta: HalfInt | None = None) -> TreeQuality:
    """Measured quality of a layering tree: class spread D, worst shrink, distortion.

    ``bound_2dlog`` is 2 * delta * log2(n - 1) when a hyperbolicity value for
    the tree's root is supplied (the guaranteed ceiling for eps_max).
    """
    D = 0
    for i in t.class_nodes():
        ms = t.members[i]
        if len(ms) > 1:
            idx = np.array(ms)
            D = max(D, int(dm.dist[np.ix_(idx, idx)].max()))
    eps2 = 0
    worst_ratio = None
    n = g.n
    for x in range(n):
        for y in range(x + 1, n):
            dt2 = tree_distance(t, x, y).doubled
            dg2 = 2 * dm.d(x, y)
            if dg2 - dt2 > eps2:
                eps2 = dg2 - dt2
            if dt2 > 0:
                ratio = Fraction(dg2, dt2)
                if worst_ratio is None or ratio > worst_ratio:
                    worst_ratio = ratio
    bound = None
    if delta is not None and n > 2:
        bound = 2 * float(delta) * float(np.log2(n - 1))
    return TreeQuality(D, HalfInt(eps2), worst_ratio, bound)


def d_approx2(g: Graph, dm: DistanceMatrix, t: LayeringTree) -> int:
    """2-approximation of D from one representative per class (one BFS each)."""
    best = 0
    for i in t.class_nodes():
        ms = t.members[i]
        if len(ms) > 1:
            rep = ms[0]
            best = max(best, int(dm.dist[rep, np.array(ms)].max()))
    return best
