"""Exact uniform-demand profiles, inertia, half-space projections and the
congestion-center machinery.

Demand counts unordered endpoint pairs once and never credits a vertex for
pairs it belongs to, so the total demand identity sum_w D(w) =
sum_{u<v} (d(u,v) - 1) holds exactly; all per-vertex values are exact
rationals accumulated Brandes-style over the shortest-path DAG.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .geodesics import canonical_geodesic, reach_on_geodesics
from .graphs import DistanceMatrix, Graph, GraphError, HalfInt, diameter
from .hyperbolicity import far_apart_pairs
from .util import parallel_map


def _source_dependency(args):
    adj, dist_row, sigma_row, order = args
    n = len(dist_row)
    delta = [Fraction(0)] * n
    for w in order:
        coeff = (1 + delta[w]) / sigma_row[w]
        dw = dist_row[w]
        for v in adj[w]:
            if dist_row[v] == dw - 1:
                delta[v] += sigma_row[v] * coeff
    return delta


@dataclass(frozen=True)
class DemandProfile:
    demand: tuple  # Fraction per vertex
    betweenness: tuple  # Fraction per vertex
    inertia: tuple  # int per vertex
    demand_argmax: tuple
    inertia_argmin: tuple
    inertia_argmax: tuple

    @property
    def total_demand(self) -> Fraction:
        return sum(self.demand, Fraction(0))


def demand_profile(g: Graph, dm: DistanceMatrix, workers: int | None = None) -> DemandProfile:
    """Exact demand/betweenness/inertia for every vertex."""
    n = g.n
    dist = dm.dist
    jobs = []
    for s in range(n):
        row = dist[s].tolist()
        order = sorted((v for v in range(n) if v != s), key=lambda v: -row[v])
        jobs.append((g.adj, row, dm.sigma[s], order))
    per_source = parallel_map(_source_dependency, jobs, workers)
    acc = [Fraction(0)] * n
    for s, delta in enumerate(per_source):
        for w in range(n):
            if w != s:
                acc[w] += delta[w]
    demand = tuple(a / 2 for a in acc)
    pairs = math.comb(n, 2)
    betweenness = tuple(d / pairs for d in demand)
    inertia_v = tuple(int(x) for x in (dist.astype(np.int64) ** 2).sum(axis=1))
    dmax = max(demand)
    imin, imax = min(inertia_v), max(inertia_v)
    return DemandProfile(
        demand,
        betweenness,
        inertia_v,
        tuple(v for v in range(n) if demand[v] == dmax),
        tuple(v for v in range(n) if inertia_v[v] == imin),
        tuple(v for v in range(n) if inertia_v[v] == imax),
    )


def inertia(dm: DistanceMatrix, w: int) -> int:
    """Second moment sum_v d(w, v)^2."""
    row = dm.dist[w].astype(np.int64)
    return int((row * row).sum())


def inertia_argmin(dm: DistanceMatrix):
    vals = (dm.dist.astype(np.int64) ** 2).sum(axis=1)
    m = int(vals.min())
    return m, tuple(int(v) for v in np.nonzero(vals == m)[0])


@dataclass(frozen=True)
class HalfSpace:
    """Projection of all vertices onto a canonical u-v geodesic.

    The doubled projection 2 f(z) = d(z, u) - d(z, v) puts u at -d(u,v)/2 and
    v at +d(u,v)/2 (positive side = closer to v).  H_k collects the vertices
    with doubled projection k; consecutive hyperplanes separate the graph
    while |k| stays below d(u, v).
    """

    u: int
    v: int
    alpha: tuple
    r_mid: int
    f2: tuple  # doubled projections per vertex
    positive: tuple
    negative: tuple
    zero: tuple

    def f(self, z: int) -> HalfInt:
        return HalfInt(self.f2[z])

    def hyperplane(self, k: int):
        return tuple(z for z, f in enumerate(self.f2) if f == k)

    def hyperplanes(self):
        return {k: self.hyperplane(k) for k in sorted(set(self.f2))}


def halfspace(g: Graph, dm: DistanceMatrix, u: int, v: int) -> HalfSpace:
    if u == v or dm.d(u, v) < 2:
        raise GraphError("halfspace needs d(u, v) >= 2")
    alpha = canonical_geodesic(g, dm, u, v)
    d = dm.d(u, v)
    r = alpha[(d + 1) // 2]
    f2 = (dm.dist[:, u].astype(int) - dm.dist[:, v].astype(int)).tolist()
    pos = tuple(z for z, f in enumerate(f2) if f > 0)
    neg = tuple(z for z, f in enumerate(f2) if f < 0)
    zero = tuple(z for z, f in enumerate(f2) if f == 0)
    return HalfSpace(u, v, alpha, int(r), tuple(f2), pos, neg, zero)


@dataclass(frozen=True)
class CongestionCenter:
    center: int
    radius_bound: HalfInt
    diametral_pair: tuple
    geodesic: tuple


def congestion_center(
    g: Graph,
    dm: DistanceMatrix,
    t: int = 0,
    delta: HalfInt | None = None,
    delta_thin: HalfInt | None = None,
) -> CongestionCenter:
    """Midpoint of the canonical diametral geodesic plus its guarantee radius.

    Any pair at distance >= diam - t has every geodesic passing within
    t/2 + 4*thin + 2*delta of this vertex; an extra half unit absorbs the
    rounding of the midpoint on odd-length geodesics.
    """
    from .hyperbolicity import delta_four_point_pruned, thin_triangles_constant

    diam, (a, b) = diameter(dm)
    geo = canonical_geodesic(g, dm, a, b)
    center = geo[(diam + 1) // 2]
    if delta is None:
        delta, _ = delta_four_point_pruned(dm)
    if delta_thin is None:
        delta_thin = thin_triangles_constant(g, dm)
    bound2 = t + 4 * delta_thin.doubled + 2 * delta.doubled + (diam % 2)
    return CongestionCenter(int(center), HalfInt(bound2), (a, b), geo)


@dataclass(frozen=True)
class CoverageReport:
    strict_fraction: Fraction  # every geodesic of the pair meets the ball
    weak_fraction: Fraction  # some geodesic meets the ball
    demand_in_ball: Fraction | None
    ball: tuple


def coverage_fraction(
    g: Graph,
    dm: DistanceMatrix,
    r: int,
    rho: int,
    profile: DemandProfile | None = None,
) -> CoverageReport:
    """Fractions of vertex pairs whose geodesics are forced through B(r, rho).

    Pairs with an endpoint inside the ball meet it trivially and are counted
    in neither numerator; the denominator stays C(n, 2).
    """
    n = g.n
    ball_mask = dm.dist[r] <= rho
    ball = tuple(int(z) for z in np.nonzero(ball_mask)[0])
    allowed = ~ball_mask
    outside = np.nonzero(allowed)[0]
    strict = 0
    for x in outside.tolist():
        reach = reach_on_geodesics(g, dm, x, allowed)
        strict += int((~reach[outside[outside > x]]).sum())
    minthrough = None
    D = dm.dist.astype(np.int32)
    for w in ball:
        cand = D[w][:, None] + D[w][None, :]
        minthrough = cand if minthrough is None else np.minimum(minthrough, cand)
    if minthrough is None:
        weak = 0
    else:
        weak_pairs = (minthrough <= D) & allowed[:, None] & allowed[None, :]
        weak = int(np.triu(weak_pairs, 1).sum())
    total = math.comb(n, 2)
    demand_in_ball = None
    if profile is not None:
        demand_in_ball = sum((profile.demand[z] for z in ball), Fraction(0))
    return CoverageReport(Fraction(strict, total), Fraction(weak, total), demand_in_ball, ball)


@dataclass(frozen=True)
class BalanceReport:
    a: int
    c_halfspace: Fraction
    b: float
    c_shell: float
    shell_residual: float
    per_geodesic: tuple
    shells: tuple
    passed: bool
    sampled: bool


def balance_check(
    g: Graph, dm: DistanceMatrix, r: int, a: int, max_geodesics: int = 100000
) -> BalanceReport:
    """Measure the two balance ingredients around center r.

    Near-diametral maximal geodesics are represented by far-apart endpoint
    pairs at distance >= diam - a (one canonical geodesic each); the halfspace
    fraction c is the worst min-side share observed.  Shell sizes n_k for
    1 <= 2k <= diam are fitted as log n_k ~ log c + k log b (k = 0 is always a
    singleton and would bias the fit); passing means every sampled geodesic
    splits off a positive fraction and the fitted growth b clears 1.1.
    """
    n = g.n
    diam, _ = diameter(dm)
    fp = far_apart_pairs(dm)
    iu, ju = np.nonzero(np.triu(fp, 1))
    keep = dm.dist[iu, ju] >= diam - a
    pairs = list(zip(iu[keep].tolist(), ju[keep].tolist()))
    sampled = len(pairs) > max_geodesics
    if sampled:
        step = len(pairs) / max_geodesics
        pairs = [pairs[int(i * step)] for i in range(max_geodesics)]
    per = []
    c_half = None
    for u, v in pairs:
        hs = halfspace(g, dm, u, v)
        share = Fraction(min(len(hs.positive), len(hs.negative)), n)
        per.append((u, v, len(hs.positive), len(hs.negative)))
        if c_half is None or share < c_half:
            c_half = share
    if c_half is None:
        c_half = Fraction(0)
    ks = []
    sizes = []
    for k in range(1, diam // 2 + 1):
        nk = int((dm.dist[r] == k).sum())
        if nk > 0:
            ks.append(k)
            sizes.append(nk)
    if len(ks) >= 2:
        A = np.vstack([np.array(ks, dtype=float), np.ones(len(ks))]).T
        y = np.log(np.array(sizes, dtype=float))
        (slope, intercept), *_ = np.linalg.lstsq(A, y, rcond=None)
        b = float(np.exp(slope))
        c_shell = float(np.exp(intercept))
        resid = float(np.abs(A @ np.array([slope, intercept]) - y).max())
    else:
        b, c_shell, resid = 1.0, float(sizes[0]) if sizes else 0.0, 0.0
    passed = b > 1.1 and c_half > 0
    return BalanceReport(
        a, c_half, b, c_shell, resid, tuple(per), tuple(zip(ks, sizes)), passed, sampled
    )


def check_congested_balls(g: Graph, dm: DistanceMatrix, thin: HalfInt, limit: int | None = None):
    """Exhaustive check: disjoint half-balls route through the pair midpoint.

    For every ordered pair (u, v) and every x strictly inside the u-half,
    y strictly inside the v-half, every x-y geodesic must pass within
    2*thin of the canonical-geodesic midpoint (plus a half-unit midpoint
    rounding allowance on odd distances).  Returns violating 5-tuples.
    """
    n = g.n
    D = dm.dist
    violations = []
    for u in range(n):
        for v in range(u + 1, n):
            d = int(D[u, v])
            if d < 1:
                continue
            geo = canonical_geodesic(g, dm, u, v)
            r = geo[(d + 1) // 2]
            thr = (2 * thin.doubled + (d % 2)) // 2
            ball = D[r] <= thr
            allowed = ~ball
            rad = (d + 1) // 2 - 1
            B1 = np.nonzero(D[u] <= rad)[0]
            B2mask = D[v] <= rad
            for x in B1.tolist():
                reach = reach_on_geodesics(g, dm, x, allowed)
                bad = np.nonzero(reach & B2mask)[0]
                for y in bad.tolist():
                    violations.append((u, v, x, y, r))
                    if limit and len(violations) >= limit:
                        return violations
    return violations


def check_halfspace_lemma(g: Graph, dm: DistanceMatrix, thin: HalfInt, limit: int | None = None):
    """Exhaustive check: near-u starts to positive-side targets cross the midpoint.

    For every pair (u, v) with d(u, v) >= 2, every x with 2 d(u, x) < d(u, v)
    and every y projecting strictly positive (closer to v), every x-y geodesic
    must pass within 2*thin (+ rounding) of the halfspace midpoint.
    """
    n = g.n
    D = dm.dist
    violations = []
    for u in range(n):
        for v in range(n):
            if u == v or D[u, v] < 2:
                continue
            d = int(D[u, v])
            hs = halfspace(g, dm, u, v)
            r = hs.r_mid
            thr = (2 * thin.doubled + (d % 2)) // 2
            allowed = D[r] > thr
            pos = np.array(hs.f2) > 0
            rad = (d + 1) // 2 - 1
            for x in np.nonzero(D[u] <= rad)[0].tolist():
                reach = reach_on_geodesics(g, dm, x, allowed)
                bad = np.nonzero(reach & pos)[0]
                for y in bad.tolist():
                    violations.append((u, v, x, y))
                    if limit and len(violations) >= limit:
                        return violations
    return violations


def check_midpoint_stability(
    g: Graph, dm: DistanceMatrix, delta: HalfInt, thin: HalfInt, limit: int | None = None
):
    """Exhaustive check: near-diametral midpoints cluster.

    For every diametral pair and every pair (x, y), the canonical midpoints
    sit within (diam - d(x,y))/2 + 4*thin + 2*delta of each other, plus two
    half-unit rounding allowances.
    """
    n = g.n
    D = dm.dist
    diam = int(D.max())
    mids = {}
    for x in range(n):
        for y in range(x + 1, n):
            geo = canonical_geodesic(g, dm, x, y)
            mids[(x, y)] = geo[(int(D[x, y]) + 1) // 2]
    violations = []
    diametral = [p for p, _ in mids.items() if D[p[0], p[1]] == diam]
    for u, v in diametral:
        r = mids[(u, v)]
        for (x, y), r2 in mids.items():
            t = diam - int(D[x, y])
            bound2 = t + 4 * thin.doubled + 2 * delta.doubled + 2
            if 2 * int(D[r, r2]) > bound2:
                violations.append((u, v, x, y, r, r2))
                if limit and len(violations) >= limit:
                    return violations
    return violations


@dataclass(frozen=True)
class GridCenterDemand:
    m: int
    n: int
    demand: Fraction
    lower: float
    upper: float
    ratio: float


def grid_center_demand(m: int) -> GridCenterDemand:
    """Exact demand at the center of the m x m lattice, with the n^1.5 band.

    The reference band is (1/4) n^1.5 to (9/8) n^1.5; ratio is demand/n^1.5.
    """
    from .generators import grid

    if m < 3 or m % 2 == 0:
        raise GraphError("grid_center_demand needs odd m >= 3")
    from .graphs import all_pairs

    g = grid(m, m)
    dm = all_pairs(g)
    n = g.n
    w = (m // 2) * m + (m // 2)
    D = dm.dist
    through = (D[w][:, None] + D[w][None, :]) == D
    through[w, :] = False
    through[:, w] = False
    us, vs = np.nonzero(np.triu(through, 1))
    sig = dm.sigma
    sw = sig[w]
    total = Fraction(0)
    for u, v in zip(us.tolist(), vs.tolist()):
        total += Fraction(sig[u][w] * sw[v], sig[u][v])
    n15 = n**1.5
    return GridCenterDemand(m, n, total, 0.25 * n15, 1.125 * n15, float(total) / n15)
