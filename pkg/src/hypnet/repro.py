"""Acceptance scenario library: one runnable check per criterion A1..A16.

Each scenario returns a Row with pass/fail plus the measured and expected
values, so the same code backs `hypnet repro` and the acceptance test module.
``smoke`` trims sizes for a fast sanity sweep; ``desk`` runs the full-scale
checks.  A14c is special: the literal instance is recorded as an expected
failure (its triple domain is empty at the stated parameters) next to the
substantive variant that demonstrates the phenomenon.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .congestion import (
    check_congested_balls,
    check_halfspace_lemma,
    check_midpoint_stability,
    congestion_center,
    demand_profile,
    grid_center_demand,
)
from .curvature import (
    EmbeddedGraph,
    alexandrov_curvature,
    gaussian_total,
    scaled_hyperbolicity,
)
from .generators import (
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
)
from .graphs import Graph, HalfInt, all_pairs, build_graph, diameter
from .hyperbolicity import (
    biconnected_blocks,
    articulation_points,
    delta_at_root,
    delta_four_point,
    delta_four_point_pruned,
    delta_rooted_extremes,
    induced_subgraph,
    separator_bound,
    simplicial_counterexample_search,
    slim_triangles_constant,
    thin_triangles_constant,
)
from .treeapprox import default_root, layering_tree, tree_distance, tree_quality
from .treelength import (
    disk_tree,
    layering_partition_spread,
    tree_length_upper,
    validate_decomposition,
)


@dataclass
class Row:
    id: str
    description: str
    passed: bool
    measured: str
    expected: str
    seconds: float = 0.0
    expected_failure: bool = False


def _random_connected(n: int, p: float, rng: random.Random) -> Graph:
    while True:
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
        if len(edges) < n - 1:
            continue
        try:
            return build_graph(edges)
        except Exception:
            continue


def _random_tree(n: int, rng: random.Random) -> Graph:
    edges = [(rng.randrange(0, i), i) for i in range(1, n)]
    return build_graph(edges)


def _suite_graphs(scale: str):
    """The shared small-graph suite used by the chain criteria (A2/A3/A4)."""
    gs = [
        ("P2", path(2)),
        ("P7", path(7)),
        ("C4", cycle(4)),
        ("C5", cycle(5)),
        ("C6", cycle(6)),
        ("C9", cycle(9)),
        ("C12", cycle(12)),
        ("K4", complete(4)),
        ("K6", complete(6)),
        ("star7", star(7)),
        ("grid3x3", grid(3, 3)),
        ("grid4x5", grid(4, 5)),
        ("ringed3", ringed_tree(3)),
        ("ringed4", ringed_tree(4)),
        ("broom(6,5)", broom(6, 5)),
        ("chord16", chord_cycle(16)),
        ("lex(5,2)", lexicographic_cycle_clique(5, 2)),
        ("cyclepath(4,6)", cartesian_cycle_path(4, 6)),
        ("sub(C5,3)", subdivision(cycle(5), 3)),
    ]
    rng = random.Random(20240801)
    count = 6 if scale == "smoke" else 12
    for i in range(count):
        n = rng.randint(6, 24)
        gs.append((f"rand{i}(n={n})", _random_connected(n, rng.uniform(0.15, 0.5), rng)))
    return gs


def a1_pruned_exactness(scale: str) -> Row:
    t0 = time.time()
    rng = random.Random(11)
    trials = 40 if scale == "smoke" else 200
    nmax = 16 if scale == "smoke" else 30
    checked = 0
    for _ in range(trials):
        n = rng.randint(4, nmax)
        g = _random_connected(n, rng.uniform(0.1, 0.6), rng)
        dm = all_pairs(g)
        db, _ = delta_four_point(dm)
        dp, _ = delta_four_point_pruned(dm)
        if db != dp:
            return Row("A1", "pruned equals brute force", False,
                       f"mismatch {dp} vs {db} on n={n}", "exact agreement", time.time() - t0)
        checked += 1
    ok_c5 = delta_four_point_pruned(all_pairs(cycle(5)))[0] == HalfInt(1)
    ok_k = all(delta_four_point_pruned(all_pairs(complete(m)))[0].doubled == 0 for m in (4, 5, 6))
    ok_trees = all(
        delta_four_point_pruned(all_pairs(_random_tree(rng.randint(4, 20), rng)))[0].doubled == 0
        for _ in range(10)
    )
    passed = ok_c5 and ok_k and ok_trees
    return Row("A1", "pruned equals brute force; C5=1/2, cliques and trees 0", passed,
               f"{checked} random graphs agree; C5={'1/2' if ok_c5 else 'bad'}",
               f"{trials} graphs exact; C5=1/2; K_m=0; trees=0", time.time() - t0)


def a2_triangle_chain(scale: str) -> Row:
    t0 = time.time()
    bad = []
    for name, g in _suite_graphs(scale):
        dm = all_pairs(g)
        d4, _ = delta_four_point_pruned(dm)
        thin = thin_triangles_constant(g, dm)
        slim = slim_triangles_constant(g, dm)
        if not (d4.doubled <= thin.doubled <= 4 * d4.doubled + 1):
            bad.append((name, "thin chain", str(d4), str(thin)))
        if slim.doubled > thin.doubled:
            bad.append((name, "slim>thin", str(slim), str(thin)))
    c5 = thin_triangles_constant(cycle(5), all_pairs(cycle(5)))
    if c5 != HalfInt(4):
        bad.append(("C5", "thin", str(c5), "2"))
    return Row("A2", "delta <= thin <= 4 delta + 1/2; slim <= thin; C5 thin = 2",
               not bad, "all graphs in chain" if not bad else str(bad[:3]),
               "exact half-integer chain", time.time() - t0)


def a3_root_robustness(scale: str) -> Row:
    t0 = time.time()
    bad = []
    for name, g in _suite_graphs(scale):
        dm = all_pairs(g)
        lo, hi = delta_rooted_extremes(dm)
        if hi.doubled > 2 * lo.doubled:
            bad.append((name, str(lo), str(hi)))
    return Row("A3", "max_r delta_r <= 2 min_r delta_r", not bad,
               "all roots within factor 2" if not bad else str(bad[:3]),
               "exact", time.time() - t0)


def a4_tree_sandwich(scale: str) -> Row:
    t0 = time.time()
    graphs = _suite_graphs(scale)
    if scale == "desk":
        graphs = graphs + [("grid15x20", grid(15, 20)), ("ringed6", ringed_tree(6))]
    bad = []
    for name, g in graphs:
        n = g.n
        dm = all_pairs(g)
        r = default_root(dm)
        t = layering_tree(g, dm, r)
        dr = delta_at_root(dm, r)
        ceiling2 = None
        if n > 2:
            ceiling2 = 2.0 * float(dr) * math.log2(n - 1)
        for x in range(n):
            for y in range(x + 1, n):
                dt2 = tree_distance(t, x, y).doubled
                dg2 = 2 * dm.d(x, y)
                if dt2 > dg2:
                    bad.append((name, "expansion", x, y))
                elif ceiling2 is not None and dg2 - dt2 > 2 * ceiling2 + 1e-9:
                    bad.append((name, "gap", x, y, dg2 - dt2, 2 * ceiling2))
        if not bad and name.startswith("P"):
            pass
    # trees reproduce distances exactly
    rng = random.Random(3)
    for i in range(5):
        g = _random_tree(rng.randint(4, 30), rng)
        dm = all_pairs(g)
        t = layering_tree(g, dm, default_root(dm))
        for x in range(g.n):
            for y in range(g.n):
                if tree_distance(t, x, y).doubled != 2 * dm.d(x, y):
                    bad.append((f"tree{i}", "inexact", x, y))
    # complete graphs give half-weight stars
    for m in (3, 5, 7):
        g = complete(m)
        dm = all_pairs(g)
        t = layering_tree(g, dm, 0)
        kinds = sorted(t.kind)
        star_ok = (
            t.kind.count("steiner") == 1
            and all(w == 1 for i, w in enumerate(t.weight2) if t.parent[i] >= 0)
            and all(len(ms) <= 1 for ms in t.members)
        )
        if not star_ok:
            bad.append((f"K{m}", "not a half-weight star", kinds))
    return Row("A4", "0 <= d_G - d_T <= 2 delta log2(n-1); trees exact; cliques half-stars",
               not bad, "sandwich holds" if not bad else str(bad[:3]),
               "exact", time.time() - t0)


def _literal_definition_classes(g: Graph, dm, r: int):
    """Brute-force shell classes: connectivity above the shell, direct edges kept."""
    from .graphs import is_connected_subset

    lev = dm.dist[r].astype(int).tolist()
    n = g.n
    classes = []
    for k in sorted(set(lev)):
        shell = [v for v in range(n) if lev[v] == k]
        parent = list(range(n))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for i, x in enumerate(shell):
            for y in shell[i + 1 :]:
                allowed = {v for v in range(n) if lev[v] > k} | {x, y}
                # connectivity of x and y inside the allowed induced subgraph
                stack = [x]
                seen = {x}
                while stack:
                    u = stack.pop()
                    for w in g.adj[u]:
                        if w in allowed and w not in seen:
                            seen.add(w)
                            stack.append(w)
                if y in seen:
                    parent[find(x)] = find(y)
        groups = {}
        for x in shell:
            groups.setdefault(find(x), []).append(x)
        classes.extend(sorted(vs) for vs in groups.values())
    return sorted(classes)


def a5_layering_oracle(scale: str) -> Row:
    t0 = time.time()
    rng = random.Random(99)
    trials = 30 if scale == "smoke" else 100
    instances = [_random_connected(rng.randint(4, 12), rng.uniform(0.15, 0.6), rng) for _ in range(trials)]
    instances += [cycle(5), cycle(6), cycle(9), complete(4), star(5), grid(3, 3),
                  ringed_tree(2), broom(3, 3), chord_cycle(8)]
    bad = 0
    for g in instances:
        dm = all_pairs(g)
        for r in range(g.n):
            fast = sorted(layering_tree(g, dm, r).merged_shell_classes())
            brute = _literal_definition_classes(g, dm, r)
            if fast != brute:
                bad += 1
    return Row("A5", "fast shell classes equal the brute-force definition", bad == 0,
               f"{len(instances)} graphs, all roots, {bad} mismatches", "0 mismatches",
               time.time() - t0)


def a6_disk_tree_counterexample(scale: str) -> Row:
    t0 = time.time()
    g = cartesian_cycle_path(8, 32)
    dm = all_pairs(g)
    details = []
    ok = True
    ks = (1, 3, 5) if scale == "smoke" else (1, 2, 3, 4, 5)
    for k in ks:
        res = disk_tree(g, dm, k, k)
        details.append(f"k={k}:{res.status}")
        ok = ok and res.status == "stall"
    k = 13  # 3 * (upper bound 5) - 2
    res = disk_tree(g, dm, k, k)
    if res.status != "ok":
        ok = False
        details.append("k=13:stall")
    else:
        vr = validate_decomposition(g, dm, res.bags, res.tree_edges)
        details.append(f"k=13:ok len={vr.length}")
        ok = ok and vr.ok and vr.length <= 2 * k
    return Row("A6", "cycle x path stalls for k < 6, succeeds at k = 13 with length <= 2k",
               ok, "; ".join(details), "stall below 6, valid at 13", time.time() - t0)


def a7_ringed_divergence(scale: str) -> Row:
    t0 = time.time()
    depths = range(3, 7) if scale == "smoke" else range(3, 9)
    deltas = {}
    spreads = {}
    tls = {}
    for ell in depths:
        g = ringed_tree(ell)
        dm = all_pairs(g)
        deltas[ell], _ = delta_four_point_pruned(dm)
        r = 0
        spreads[ell] = layering_partition_spread(g, dm, r)
        roots = range(g.n) if g.n <= 600 else range(0, g.n, 7)
        tls[ell] = min(layering_partition_spread(g, dm, rr) for rr in roots) + 1
    base = deltas[4] if 4 in deltas else deltas[min(deltas)]
    bounded = all(d.doubled <= base.doubled + 1 for d in deltas.values())
    growing = all(
        spreads[ell + 2] >= spreads[ell] + 1 and tls[ell + 2] >= tls[ell] + 1
        for ell in depths
        if ell + 2 in spreads
    )
    msg = (
        "delta: " + ",".join(str(deltas[e]) for e in depths)
        + " D: " + ",".join(str(spreads[e]) for e in depths)
        + " tl: " + ",".join(str(tls[e]) for e in depths)
    )
    return Row("A7", "ringed trees: bounded delta, growing tree spread/length",
               bounded and growing, msg, "delta flat, D and tl +1 per 2 levels",
               time.time() - t0)


def a8_cycle_path_demand(scale: str) -> Row:
    t0 = time.time()
    top = 12 if scale == "smoke" else 40
    bad = []
    for n in range(3, top + 1):
        g = cycle(2 * n)
        dm = all_pairs(g)
        p = demand_profile(g, dm)
        want = Fraction((n - 1) ** 2, 2)
        if any(d != want for d in p.demand):
            bad.append(("cycle", n))
    for n in (4, 7, 9, 12):
        g = path(n + 1)
        dm = all_pairs(g)
        p = demand_profile(g, dm)
        center = p.demand[n // 2]
        want = (n // 2) * ((n + 1) // 2)
        if center != want or center < Fraction(2 * n * n, 9):
            bad.append(("path", n))
    return Row("A8", "cycle demand (n-1)^2/2; path center floor*ceil >= 2n^2/9",
               not bad, "closed forms hold" if not bad else str(bad),
               "exact rationals", time.time() - t0)


def a9_grid_band(scale: str) -> Row:
    t0 = time.time()
    sides = (9, 15, 21) if scale == "smoke" else (21, 31, 41)
    lo = 0.25 * 0.65
    hi = 1.125 * 1.35
    ratios = []
    for m in sides:
        ratios.append(grid_center_demand(m).ratio)
    in_band = all(lo < r < hi for r in ratios)

    def band_dist(r):
        if r < 0.25:
            return 0.25 - r
        if r > 1.125:
            return r - 1.125
        return 0.0

    dists = [band_dist(r) for r in ratios]
    monotone = all(dists[i + 1] <= dists[i] + 1e-12 for i in range(len(dists) - 1))
    return Row("A9", "grid center demand ratio inside widened band, approaching it",
               in_band and monotone,
               " ".join(f"m={m}:{r:.4f}" for m, r in zip(sides, ratios)),
               f"({lo:.4f}, {hi:.4f}) and non-increasing distance", time.time() - t0)


def a10_transitivity(scale: str) -> Row:
    t0 = time.time()
    bad = []
    for name, g in (("lex(8,3)", lexicographic_cycle_clique(8, 3)), ("chord16", chord_cycle(16))):
        dm = all_pairs(g)
        p = demand_profile(g, dm)
        if len(set(p.demand)) != 1 or len(set(p.inertia)) != 1:
            bad.append(name)
    return Row("A10", "vertex-transitive families have uniform demand and inertia",
               not bad, "uniform" if not bad else str(bad), "exact equality",
               time.time() - t0)


def _lemma_instances(scale: str):
    insts = [
        cycle(12), grid(4, 5), ringed_tree(4), broom(10, 7), chord_cycle(16),
        lexicographic_cycle_clique(5, 2), complete(6), star(8), path(20),
        cartesian_cycle_path(4, 8), subdivision(cycle(4), 3), two_clique_block(4),
    ]
    if scale == "desk":
        insts += [cycle(20), grid(5, 6), ringed_tree(3), broom(20, 9),
                  lexicographic_cycle_clique(8, 3), y_graph(2, 3), subdivision(complete(4), 4)]
    return [g for g in insts if g.n <= 60]


def a11_center_lemmas(scale: str) -> Row:
    t0 = time.time()
    total = [0, 0, 0]
    count = 0
    for g in _lemma_instances(scale):
        dm = all_pairs(g)
        thin = thin_triangles_constant(g, dm)
        delta, _ = delta_four_point_pruned(dm)
        total[0] += len(check_congested_balls(g, dm, thin, limit=5))
        total[1] += len(check_halfspace_lemma(g, dm, thin, limit=5))
        total[2] += len(check_midpoint_stability(g, dm, delta, thin, limit=5))
        count += 1
    ok = total == [0, 0, 0]
    return Row("A11", "ball/halfspace/midpoint lemmas hold exhaustively (n <= 60)",
               ok, f"{count} instances, violations={tuple(total)}", "(0, 0, 0)",
               time.time() - t0)


def a12_broom_discrepancy(scale: str) -> Row:
    t0 = time.time()
    g = broom(40, 9)
    dm = all_pairs(g)
    cc = congestion_center(g, dm)
    p = demand_profile(g, dm)
    v4 = 40 + 4  # handle vertex v_4
    ok = cc.center == v4 and p.demand_argmax == (0,)
    return Row("A12", "broom: geometric center v_4 but demand peaks at the hub",
               ok, f"center={cc.center} argmax={p.demand_argmax}",
               f"center={v4} argmax=(0,)", time.time() - t0)


def _wheel(d: int):
    rot = {0: tuple(range(1, d + 1))}
    for i in range(1, d + 1):
        prev = i - 1 if i > 1 else d
        nxt = i + 1 if i < d else 1
        rot[i] = (nxt, 0, prev)
    g = Graph(d + 1, [sorted(rot[v]) for v in range(d + 1)])
    return EmbeddedGraph(g, rot), g


OCTAHEDRON_ROTATION = {
    0: (1, 2, 3, 4),
    1: (2, 0, 4, 5),
    2: (0, 1, 5, 3),
    3: (0, 2, 5, 4),
    4: (1, 0, 3, 5),
    5: (2, 1, 4, 3),
}


def a13_curvature(scale: str) -> Row:
    t0 = time.time()
    bad = []
    for d in (5, 6, 7):
        eg, g = _wheel(d)
        dm = all_pairs(g)
        got = alexandrov_curvature(eg, dm, 0)
        want = (2 * math.pi / 3**1.5) * (6 / d - 1)
        if abs(got - want) > 1e-12:
            bad.append(("wheel", d, got, want))
    g = Graph(6, [sorted(OCTAHEDRON_ROTATION[v]) for v in range(6)])
    eg = EmbeddedGraph(g, OCTAHEDRON_ROTATION)
    if gaussian_total(eg) != Fraction(g.n - g.m + len(eg.faces)):
        bad.append(("octahedron", "euler"))
    if gaussian_total(eg) != 2:
        bad.append(("octahedron", "total", str(gaussian_total(eg))))
    for d in (6, 7):
        eg = triangulation_growth(d, 25, seed=2)
        gg = eg.graph
        if gaussian_total(eg) != Fraction(gg.n - gg.m + len(eg.faces)):
            bad.append(("growth", d))
        dm = all_pairs(gg)
        for v in range(gg.n):
            if eg.is_interior(v):
                want = (2 * math.pi / 3**1.5) * (6 / gg.degree(v) - 1)
                if abs(alexandrov_curvature(eg, dm, v) - want) > 1e-12:
                    bad.append(("growth-curv", d, v))
    return Row("A13", "unit-fan closed form to 1e-12; Gaussian total = V - E + F",
               not bad, "all matched" if not bad else str(bad[:3]),
               "1e-12 agreement", time.time() - t0)


def a14_scaled(scale: str):
    rows = []
    t0 = time.time()
    g = complete(3)
    dm = all_pairs(g)
    rep = scaled_hyperbolicity(g, dm, 0)
    rows.append(Row("A14a", "a triangle triple attains ratio 2", rep.h_r == 2,
                    str(rep.h_r), "2", time.time() - t0))
    t0 = time.time()
    gs = grid(41, 6)
    dm = all_pairs(gs)
    rep = scaled_hyperbolicity(gs, dm, 10)
    ok = rep.upper_bound < 1.5 and float(rep.h_r) < 1.5
    rows.append(Row("A14b", "grid strip (m=40, R=10) has H_R < 3/2", ok,
                    f"H_10={rep.h_r} upper={rep.upper_bound:.4f} capped={rep.capped}",
                    "< 3/2", time.time() - t0))
    t0 = time.time()
    base = two_clique_block(4)
    lit = subdivision(base, 3)  # ceil(9/3)
    dml = all_pairs(lit)
    repl = scaled_hyperbolicity(lit, dml, 9)
    rows.append(Row("A14c-literal",
                    "ceil(R/3)-subdivided two-clique block graph has H_9 = 2",
                    repl.h_r == 2,
                    f"H_9={repl.h_r} eligible_triples={repl.eligible_triples} (diam={diameter(dml)[0]} <= R)",
                    "2 (unattainable: no triple spreads past R)", time.time() - t0,
                    expected_failure=True))
    t0 = time.time()
    sub = subdivision(base, 10)  # R + 1 makes the subdivided triangles eligible
    dms = all_pairs(sub)
    reps = scaled_hyperbolicity(sub, dms, 9)
    rows.append(Row("A14d", "(R+1)-subdivided two-clique block graph has H_9 = 2",
                    reps.h_r == 2 and not reps.capped, str(reps.h_r), "2",
                    time.time() - t0))
    return rows


def a15_separator(scale: str) -> Row:
    t0 = time.time()
    rng = random.Random(17)
    trials = 30 if scale == "smoke" else 100
    found = 0
    bad = []
    while found < trials:
        n = rng.randint(5, 16)
        g = _random_connected(n, rng.uniform(0.1, 0.4), rng)
        arts = articulation_points(g)
        if not arts:
            continue
        found += 1
        dm = all_pairs(g)
        d4, _ = delta_four_point(dm)
        sb = separator_bound(g, dm, [arts[0]])
        if d4.doubled > sb.bound.doubled:
            bad.append(("bound", n))
        blocks = biconnected_blocks(g)
        per_block = []
        for blk in blocks:
            sub, _ = induced_subgraph(g, blk)
            per_block.append(delta_four_point(all_pairs(sub))[0])
        if max(per_block) != d4:
            bad.append(("blocks", n, str(d4), str(max(per_block))))
    return Row("A15", "separator bound dominates; block maximum is exact",
               not bad, f"{found} graphs ok" if not bad else str(bad[:3]),
               "bound >= delta; equality over blocks", time.time() - t0)


def a16_simplicial(scale: str) -> Row:
    t0 = time.time()
    hit = simplicial_counterexample_search(6)
    ok = False
    msg = "no hit"
    if hit is not None:
        dm = all_pairs(hit.graph)
        before, _ = delta_four_point(dm)
        rest = [v for v in range(hit.graph.n) if v != hit.vertex]
        sub, _ = induced_subgraph(hit.graph, rest)
        after, _ = delta_four_point(all_pairs(sub))
        ok = before == hit.delta_before and after == hit.delta_after and after < before
        msg = f"n={hit.graph.n} z={hit.vertex} {hit.delta_before}->{hit.delta_after}"
    return Row("A16", "deleting a simplicial vertex can strictly lower delta",
               ok, msg, "strict drop verified by brute force", time.time() - t0)


SCENARIOS = {
    "A1": a1_pruned_exactness,
    "A2": a2_triangle_chain,
    "A3": a3_root_robustness,
    "A4": a4_tree_sandwich,
    "A5": a5_layering_oracle,
    "A6": a6_disk_tree_counterexample,
    "A7": a7_ringed_divergence,
    "A8": a8_cycle_path_demand,
    "A9": a9_grid_band,
    "A10": a10_transitivity,
    "A11": a11_center_lemmas,
    "A12": a12_broom_discrepancy,
    "A13": a13_curvature,
    "A14": a14_scaled,
    "A15": a15_separator,
    "A16": a16_simplicial,
}


def run_suite(scale: str = "smoke", only=None):
    rows = []
    for cid, fn in SCENARIOS.items():
        if only and cid not in only:
            continue
        result = fn(scale)
        if isinstance(result, list):
            rows.extend(result)
        else:
            rows.append(result)
    return rows


def summary_table(rows) -> str:
    lines = []
    width = max(len(r.id) for r in rows)
    for r in rows:
        status = "PASS" if r.passed else ("XFAIL" if r.expected_failure else "FAIL")
        lines.append(
            f"{r.id:<{width}}  {status:<5}  {r.seconds:6.1f}s  {r.description}"
        )
        lines.append(f"{'':<{width}}         measured: {r.measured}")
        lines.append(f"{'':<{width}}         expected: {r.expected}")
    npass = sum(r.passed for r in rows)
    nxfail = sum(1 for r in rows if not r.passed and r.expected_failure)
    nfail = len(rows) - npass - nxfail
    lines.append(f"{npass} passed, {nfail} failed, {nxfail} documented-defect rows")
    return "\n".join(lines)
