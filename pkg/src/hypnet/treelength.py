"""Tree decompositions: validation, layering-tree upper bounds, the ball-based
iterative decomposition with its stall detector, and longest induced cycle."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .graphs import (
    DistanceMatrix,
    Graph,
    GraphError,
    HalfInt,
    connected_components_of_subset,
)
from .hyperbolicity import delta_four_point_pruned
from .treeapprox import layering_tree


@dataclass(frozen=True)
class TreeDecomposition:
    bags: tuple  # tuple of sorted vertex tuples
    tree_edges: tuple  # (i, j) bag indices
    length: int
    width: int


@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    length: int
    width: int
    violations: tuple


def _bag_metrics(dm: DistanceMatrix, bags):
    length = 0
    width = 0
    for bag in bags:
        width = max(width, len(bag) - 1)
        if len(bag) > 1:
            idx = np.array(bag)
            length = max(length, int(dm.dist[np.ix_(idx, idx)].max()))
    return length, width


def validate_decomposition(g: Graph, dm: DistanceMatrix, bags, tree_edges) -> ValidationResult:
    """Check the three decomposition axioms; violations are reported, not raised.

    length is the largest in-graph distance between two vertices sharing a
    bag, width the largest bag size minus one.
    """
    bags = [tuple(sorted(b)) for b in bags]
    violations = []
    nb = len(bags)
    edge_ok = len(tree_edges) == nb - 1
    adjb = [[] for _ in range(nb)]
    for i, j in tree_edges:
        adjb[i].append(j)
        adjb[j].append(i)
    if nb:
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for w in adjb[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        edge_ok = edge_ok and len(seen) == nb
    if not edge_ok:
        violations.append("bag graph is not a tree")
    covered = set()
    for bag in bags:
        covered.update(bag)
    for v in range(g.n):
        if v not in covered:
            violations.append(f"vertex {v} in no bag")
    bagset = [set(b) for b in bags]
    for u, v in g.edges():
        if not any(u in b and v in b for b in bagset):
            violations.append(f"edge ({u}, {v}) in no bag")
    for v in range(g.n):
        holding = [i for i, b in enumerate(bagset) if v in b]
        if len(holding) <= 1:
            continue
        hs = set(holding)
        seen = {holding[0]}
        stack = [holding[0]]
        while stack:
            u = stack.pop()
            for w in adjb[u]:
                if w in hs and w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != len(holding):
            violations.append(f"bags containing vertex {v} are not connected")
    length, width = _bag_metrics(dm, bags)
    return ValidationResult(not violations, length, width, tuple(violations))


@dataclass(frozen=True)
class TreeLengthBound:
    upper: int
    root: int
    decomposition: TreeDecomposition
    delta_lower: HalfInt
    per_root: dict


def _merged_classes_with_parents(g: Graph, dm: DistanceMatrix, r: int):
    """Coarse shell classes for root r plus each class's parent class index."""
    t = layering_tree(g, dm, r)
    classes = t.merged_shell_classes()
    lev = dm.dist[r]
    class_of = {}
    for i, c in enumerate(classes):
        for v in c:
            class_of[v] = i
    parents = []
    for i, c in enumerate(classes):
        x = c[0]
        if lev[x] == 0:
            parents.append(-1)
            continue
        p = next(w for w in g.adj[x] if lev[w] == lev[x] - 1)
        parents.append(class_of[p])
    return classes, parents


def _decomposition_from_root(g: Graph, dm: DistanceMatrix, r: int) -> TreeDecomposition:
    classes, parents = _merged_classes_with_parents(g, dm, r)
    lev = dm.dist[r]
    bags = []
    for c in classes:
        bag = set(c)
        k = int(lev[c[0]])
        if k > 0:
            for v in c:
                bag.update(w for w in g.adj[v] if lev[w] == k - 1)
        bags.append(tuple(sorted(bag)))
    edges = tuple((i, p) for i, p in enumerate(parents) if p >= 0)
    length, width = _bag_metrics(dm, bags)
    return TreeDecomposition(tuple(bags), edges, length, width)


def layering_partition_spread(g: Graph, dm: DistanceMatrix, r: int) -> int:
    """Largest in-graph distance within one coarse shell class for root r."""
    t = layering_tree(g, dm, r)
    best = 0
    for c in t.merged_shell_classes():
        if len(c) > 1:
            idx = np.array(c)
            best = max(best, int(dm.dist[np.ix_(idx, idx)].max()))
    return best


def tree_length_upper(g: Graph, dm: DistanceMatrix, roots=None) -> TreeLengthBound:
    """Upper-bound tree-length by the best layering partition over candidate roots.

    For each root the coarse shell classes give a valid decomposition whose
    length is at most the class spread plus one; the reported bound is the
    minimum spread + 1, with the explicit decomposition for the best root.
    The four-point hyperbolicity is attached as the matching lower-bound side.
    """
    n = g.n
    if roots is None:
        roots = range(n) if n <= 600 else sorted({int(v) for v in np.linspace(0, n - 1, 64)})
    per_root = {}
    for r in roots:
        per_root[r] = layering_partition_spread(g, dm, r)
    best_root = min(per_root, key=lambda r: (per_root[r], r))
    decomp = _decomposition_from_root(g, dm, best_root)
    delta, _ = delta_four_point_pruned(dm)
    return TreeLengthBound(per_root[best_root] + 1, best_root, decomp, delta, per_root)


@dataclass
class DiskTreeResult:
    status: str  # "ok" or "stall"
    k: int
    ell: int
    bags: tuple
    tree_edges: tuple
    trace: tuple
    stages: int
    stall_reason: str | None = None


def _attachment_sets(g: Graph, covered):
    """Components of the uncovered part with their covered neighbour sets."""
    rest = [v for v in range(g.n) if v not in covered]
    comps = connected_components_of_subset(g, rest)
    out = []
    for comp in comps:
        attach = set()
        for v in comp:
            attach.update(w for w in g.adj[v] if w in covered)
        out.append((comp, sorted(attach)))
    return out


def _property_holds(g: Graph, dm: DistanceMatrix, covered, bags, ell):
    for _, attach in _attachment_sets(g, covered):
        if len(attach) > 1:
            idx = np.array(attach)
            if int(dm.dist[np.ix_(idx, idx)].max()) > ell:
                return False
        aset = set(attach)
        if not any(aset <= b for b in bags):
            return False
    return True


def disk_tree(
    g: Graph,
    dm: DistanceMatrix,
    k: int,
    ell: int,
    seed_vertex: int = 0,
    stage_cap_factor: int = 10,
) -> DiskTreeResult:
    """Iterative ball-based tree decomposition with farthest-first refinement.

    Each stage grows the covered region by one bag: the attachment set of a
    chosen uncovered component plus the radius-k ball around an attachment
    vertex, shrunk farthest-first (ties: largest index) until every uncovered
    component again has a small-diameter attachment inside a single bag.  A
    stall is declared when a full sweep over (component, attachment vertex)
    choices adds nothing new, or a stage cap is hit; the trace records every
    stage for auditing.
    """
    if k < 1 or ell < 1:
        raise GraphError("disk_tree needs k, ell >= 1")
    D = dm.dist
    covered: set = set()
    bags: list = []
    bagsets: list = []
    tree_edges: list = []
    trace: list = []
    stages = 0
    cap = stage_cap_factor * g.n
    while len(covered) < g.n:
        stages += 1
        if stages > cap:
            return DiskTreeResult(
                "stall", k, ell, tuple(bags), tuple(tree_edges), tuple(trace),
                stages, "stage cap exceeded",
            )
        if not covered:
            candidates = [(list(range(g.n)), [], seed_vertex)]
        else:
            candidates = []
            for comp, attach in _attachment_sets(g, covered):
                for x in attach:
                    candidates.append((comp, attach, x))
        committed = False
        for comp, attach, x in candidates:
            ball = set(np.nonzero(D[x] <= k)[0].tolist())
            S = set(attach) | (ball - covered)
            # removal candidates are all bag vertices inside the ball, whether
            # covered or not; attachment vertices outside the ball are safe
            removable = S & ball
            removals = []
            while True:
                new_vertices = S - covered
                if not new_vertices:
                    break
                trial_cov = covered | S
                trial_bags = bagsets + [S]
                if _property_holds(g, dm, trial_cov, trial_bags, ell):
                    bag = tuple(sorted(S))
                    bags.append(bag)
                    bagsets.append(set(S))
                    if covered:
                        aset = set(attach)
                        parent = next(
                            i for i, b in enumerate(bagsets[:-1]) if aset <= b
                        )
                        tree_edges.append((parent, len(bags) - 1))
                    covered = trial_cov
                    trace.append(
                        {
                            "stage": stages,
                            "component_min": comp[0],
                            "component_size": len(comp),
                            "x": x,
                            "bag_size": len(bag),
                            "removed": removals,
                            "committed": True,
                        }
                    )
                    committed = True
                    break
                live = removable & S
                if not live:
                    break
                far = max(live, key=lambda z: (D[x, z], z))
                S.discard(far)
                removals.append(int(far))
            if committed:
                break
            trace.append(
                {
                    "stage": stages,
                    "component_min": comp[0],
                    "component_size": len(comp),
                    "x": x,
                    "bag_size": 0,
                    "removed": removals,
                    "committed": False,
                }
            )
        if not committed:
            return DiskTreeResult(
                "stall", k, ell, tuple(bags), tuple(tree_edges), tuple(trace),
                stages, "no (component, attachment) choice can add a vertex",
            )
    return DiskTreeResult("ok", k, ell, tuple(bags), tuple(tree_edges), tuple(trace), stages)


def longest_induced_cycle(g: Graph, cap: int = 24):
    """Exact length of the longest chordless cycle; None when n exceeds the cap.

    DFS over induced paths anchored at their minimum vertex s.  The candidate
    pool holds vertices above s that are unused and non-adjacent to every
    interior path vertex; a pool member adjacent to both the path tail and s
    closes an induced cycle, one adjacent to the tail only extends the path.
    Cycles are counted once by requiring the closing vertex to exceed the
    first step.
    """
    n = g.n
    if n > cap:
        return None
    adjset = [frozenset(a) for a in g.adj]
    best = 0
    for s in range(n):
        start_pool = frozenset(w for w in range(n) if w > s)
        for v1 in sorted(adjset[s]):
            if v1 <= s:
                continue
            stack = [((s, v1), start_pool - {v1})]
            while stack:
                path, pool = stack.pop()
                if len(path) + len(pool) <= best:
                    continue
                last = path[-1]
                for w in sorted(pool & adjset[last]):
                    if s in adjset[w]:
                        if len(path) + 1 >= 3 and w > path[1]:
                            best = max(best, len(path) + 1)
                    else:
                        stack.append(
                            (path + (w,), frozenset(z for z in pool if z != w and z not in adjset[last])))
    return best
