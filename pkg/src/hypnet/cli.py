"""Command-line front end.

Exit codes: 0 success, 2 input error, 3 stall or negative verdict, 4 result
capped.  Reports are pure functions of the input bytes and flags; exact
rationals serialize as "p/q" strings so nothing is lost to JSON numbers.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from fractions import Fraction

from . import __version__
from .congestion import (
    balance_check,
    congestion_center,
    coverage_fraction,
    demand_profile,
    grid_center_demand,
)
from .curvature import EmbeddedGraph, alexandrov_curvature, gaussian_curvature, gaussian_total, scaled_hyperbolicity
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
from .graphs import Graph, GraphError, HalfInt, all_pairs, diameter, read_edge_list, write_edge_list
from .hyperbolicity import hyperbolicity_report
from .treeapprox import default_root, layering_tree, tree_quality, d_approx2
from .treelength import disk_tree, longest_induced_cycle, tree_length_upper, validate_decomposition
from .util import available_workers


def _encode(x):
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, HalfInt):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _encode(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_encode(v) for v in x]
    if hasattr(x, "item") and not isinstance(x, (str, bytes)):  # numpy scalar
        return x.item()
    return x


def _emit(report: dict, args) -> None:
    if getattr(args, "tsv", False):
        for key, value in _flatten(_encode(report)):
            print(f"{key}\t{value}")
    else:
        print(json.dumps(_encode(report), indent=2))


def _flatten(obj, prefix=""):
    if isinstance(obj, dict):
        for k, v in obj.items():
            yield from _flatten(v, f"{prefix}{k}." if prefix else f"{k}.")
    elif isinstance(obj, list):
        yield prefix[:-1], " ".join(str(v) for v in obj)
    else:
        yield prefix[:-1], obj


def _load_graph(spec: str):
    if spec == "-":
        text = sys.stdin.read()
    else:
        with open(spec) as fh:
            text = fh.read()
    digest = hashlib.sha256(text.encode()).hexdigest()[:16]
    return read_edge_list(text), digest


def _base_report(digest: str) -> dict:
    return {"tool": "hypnet", "version": __version__, "input_digest": digest}


GENERATORS = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "star": (star, 1),
    "grid": (grid, 2),
    "ringed-tree": (ringed_tree, 1),
    "cycle-path": (cartesian_cycle_path, 2),
    "lex-cycle-clique": (lexicographic_cycle_clique, 2),
    "broom": (broom, 2),
    "chord-cycle": (chord_cycle, 1),
    "y-graph": (y_graph, 2),
    "two-clique-block": (two_clique_block, 1),
}


def cmd_gen(args) -> int:
    if args.family not in GENERATORS:
        print(f"unknown family {args.family!r}; choices: {', '.join(sorted(GENERATORS))}", file=sys.stderr)
        return 2
    fn, argc = GENERATORS[args.family]
    if len(args.params) != argc:
        print(f"{args.family} takes {argc} integer parameter(s)", file=sys.stderr)
        return 2
    g = fn(*[int(p) for p in args.params])
    if args.subdivide > 1:
        g = subdivision(g, args.subdivide)
    text = write_edge_list(g)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_delta(args) -> int:
    g, digest = _load_graph(args.graph)
    dm = all_pairs(g, workers=args.workers)
    rep = hyperbolicity_report(g, dm, method=args.method)
    out = _base_report(digest)
    out["delta"] = {
        "four_point": str(rep.delta_four_point),
        "witness": None
        if rep.witness is None
        else {
            "vertices": list(rep.witness.vertices),
            "sums": list(rep.witness.sums),
        },
        "rooted_min": None if rep.delta_rooted_min is None else str(rep.delta_rooted_min),
        "rooted_max": None if rep.delta_rooted_max is None else str(rep.delta_rooted_max),
        "thin": None if rep.thin is None else str(rep.thin),
        "slim": None if rep.slim is None else str(rep.slim),
        "diameter": rep.diameter,
        "method": args.method,
    }
    _emit(out, args)
    return 0


def cmd_tree(args) -> int:
    g, digest = _load_graph(args.graph)
    dm = all_pairs(g, workers=args.workers)
    root = args.root if args.root is not None else default_root(dm)
    t = layering_tree(g, dm, root)
    if args.dot:
        print(_tree_dot(t))
        return 0
    q = tree_quality(g, dm, t)
    out = _base_report(digest)
    out["tree"] = {
        "root": root,
        "nodes": [
            {
                "id": i,
                "kind": t.kind[i],
                "level": str(HalfInt(t.level2[i])),
                "parent": t.parent[i],
                "weight": str(HalfInt(t.weight2[i])),
                "members": list(t.members[i]),
            }
            for i in range(t.n_nodes)
        ],
        "vmap": list(t.vmap),
        "quality": {
            "D": q.D,
            "eps_max": str(q.eps_max),
            "distortion_bound": q.distortion_bound,
            "d_approx2": d_approx2(g, dm, t),
        },
    }
    _emit(out, args)
    return 0


def _tree_dot(t) -> str:
    lines = ["graph layeringtree {"]
    for i in range(t.n_nodes):
        if t.kind[i] == "steiner":
            lines.append(f'  n{i} [shape=point, label="", xlabel="{HalfInt(t.level2[i])}"];')
        else:
            label = ",".join(str(v) for v in t.members[i])
            lines.append(f'  n{i} [shape=box, label="{{{label}}}"];')
    for i in range(t.n_nodes):
        p = t.parent[i]
        if p >= 0:
            lines.append(f'  n{p} -- n{i} [label="{HalfInt(t.weight2[i])}"];')
    lines.append("}")
    return "\n".join(lines)


def cmd_treelength(args) -> int:
    g, digest = _load_graph(args.graph)
    dm = all_pairs(g, workers=args.workers)
    out = _base_report(digest)
    code = 0
    if args.disk:
        k, ell = int(args.disk[0]), int(args.disk[1])
        res = disk_tree(g, dm, k, ell, seed_vertex=args.seed_vertex)
        block = {"status": res.status, "k": k, "ell": ell, "stages": res.stages}
        if res.status == "ok":
            vr = validate_decomposition(g, dm, res.bags, res.tree_edges)
            block["bags"] = [list(b) for b in res.bags]
            block["tree_edges"] = [list(e) for e in res.tree_edges]
            block["valid"] = vr.ok
            block["length"] = vr.length
            block["width"] = vr.width
        else:
            block["stall_reason"] = res.stall_reason
            block["trace"] = list(res.trace)
            code = 3
        out["disk_tree"] = block
    else:
        tl = tree_length_upper(g, dm)
        vr = validate_decomposition(g, dm, tl.decomposition.bags, tl.decomposition.tree_edges)
        out["tree_length"] = {
            "upper": tl.upper,
            "root": tl.root,
            "delta_lower": str(tl.delta_lower),
            "decomposition_valid": vr.ok,
            "decomposition_length": vr.length,
            "decomposition_width": vr.width,
        }
    if args.induced_cycle:
        lam = longest_induced_cycle(g)
        out["longest_induced_cycle"] = lam if lam is not None else "not computed"
    _emit(out, args)
    return code


def cmd_congestion(args) -> int:
    g, digest = _load_graph(args.graph)
    dm = all_pairs(g, workers=args.workers)
    profile = demand_profile(g, dm, workers=args.workers)
    out = _base_report(digest)
    out["demand"] = {
        "per_vertex": [str(_encode(d)) for d in profile.demand],
        "argmax": list(profile.demand_argmax),
        "total": _encode(profile.total_demand),
        "inertia": list(profile.inertia),
        "inertia_argmin": list(profile.inertia_argmin),
    }
    if args.center:
        cc = congestion_center(g, dm)
        out["center"] = {
            "vertex": cc.center,
            "radius_bound": str(cc.radius_bound),
            "diametral_pair": list(cc.diametral_pair),
        }
    if args.balance is not None:
        r = congestion_center(g, dm).center
        br = balance_check(g, dm, r, args.balance)
        out["balance"] = {
            "a": br.a,
            "c_halfspace": _encode(br.c_halfspace),
            "b": br.b,
            "c_shell": br.c_shell,
            "shells": [list(s) for s in br.shells],
            "passed": br.passed,
        }
    if args.coverage is not None:
        r = congestion_center(g, dm).center
        cov = coverage_fraction(g, dm, r, args.coverage, profile=profile)
        out["coverage"] = {
            "r": r,
            "rho": args.coverage,
            "strict_fraction": _encode(cov.strict_fraction),
            "weak_fraction": _encode(cov.weak_fraction),
            "demand_in_ball": _encode(cov.demand_in_ball),
        }
    _emit(out, args)
    return 0


def cmd_grid_demand(args) -> int:
    res = grid_center_demand(args.side)
    out = {
        "tool": "hypnet",
        "version": __version__,
        "grid_demand": {
            "side": res.m,
            "n": res.n,
            "demand": _encode(res.demand),
            "lower": res.lower,
            "upper": res.upper,
            "ratio": res.ratio,
        },
    }
    _emit(out, args)
    return 0


def cmd_curvature(args) -> int:
    g, digest = _load_graph(args.graph)
    with open(args.embedding) as fh:
        rotation = {}
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = [int(tok) for tok in line.split()]
            rotation[parts[0]] = tuple(parts[1:])
    eg = EmbeddedGraph(g, rotation, metric=args.metric)
    dm = all_pairs(g, workers=args.workers)
    out = _base_report(digest)
    per_vertex = []
    for v in range(g.n):
        entry = {"vertex": v, "gaussian": _encode(gaussian_curvature(eg, v))}
        if eg.is_interior(v):
            entry["alexandrov"] = alexandrov_curvature(eg, dm, v)
        per_vertex.append(entry)
    out["curvature"] = {
        "metric": args.metric,
        "faces": [list(f) for f in eg.faces],
        "per_vertex": per_vertex,
        "gaussian_total": _encode(gaussian_total(eg)),
    }
    _emit(out, args)
    return 0


def cmd_scaled(args) -> int:
    g, digest = _load_graph(args.graph)
    dm = all_pairs(g, workers=args.workers)
    rep = scaled_hyperbolicity(g, dm, args.R, path_cap=args.cap)
    out = _base_report(digest)
    out["scaled"] = {
        "R": rep.R,
        "H_R": _encode(rep.h_r),
        "upper_bound": rep.upper_bound,
        "witness": None if rep.witness is None else list(rep.witness),
        "paths_enumerated": rep.paths_enumerated,
        "capped": rep.capped,
        "eligible_triples": rep.eligible_triples,
    }
    _emit(out, args)
    return 4 if rep.capped else 0


def cmd_repro(args) -> int:
    from .repro import run_suite, summary_table

    rows = run_suite(args.scale, only=args.only.split(",") if args.only else None)
    if args.json:
        print(json.dumps(_encode([row.__dict__ for row in rows]), indent=2))
    else:
        print(summary_table(rows))
    hard_failures = [r for r in rows if not r.passed and not r.expected_failure]
    return 3 if hard_failures else 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="hypnet", description=__doc__)
    parser.add_argument("--workers", type=int, default=available_workers())
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit a generated graph as an edge list")
    p.add_argument("family")
    p.add_argument("params", nargs="*")
    p.add_argument("-o", "--output")
    p.add_argument("--subdivide", type=int, default=1)
    p.set_defaults(fn=cmd_gen)

    def graph_cmd(name, fn, help_):
        q = sub.add_parser(name, help=help_)
        q.add_argument("graph", help="edge-list file or - for stdin")
        q.add_argument("--json", action="store_true", default=True)
        q.add_argument("--tsv", action="store_true")
        q.set_defaults(fn=fn)
        return q

    p = graph_cmd("delta", cmd_delta, "hyperbolicity constants")
    p.add_argument("--method", choices=["exact", "pruned", "rooted"], default="pruned")

    p = graph_cmd("tree", cmd_tree, "layering tree and quality")
    p.add_argument("--root", type=int)
    p.add_argument("--dot", action="store_true")

    p = graph_cmd("treelength", cmd_treelength, "tree-length bounds / disk tree")
    p.add_argument("--disk", nargs=2, metavar=("K", "ELL"))
    p.add_argument("--seed-vertex", type=int, default=0)
    p.add_argument("--lambda", dest="induced_cycle", action="store_true")

    p = graph_cmd("congestion", cmd_congestion, "demand profile and center")
    p.add_argument("--center", action="store_true")
    p.add_argument("--balance", type=int)
    p.add_argument("--coverage", type=int)

    p = sub.add_parser("grid-demand", help="exact center demand of the square grid")
    p.add_argument("--side", type=int, required=True)
    p.add_argument("--json", action="store_true", default=True)
    p.add_argument("--tsv", action="store_true")
    p.set_defaults(fn=cmd_grid_demand)

    p = graph_cmd("curvature", cmd_curvature, "embedded curvature")
    p.add_argument("--embedding", required=True, help="per line: vertex then cyclic neighbours")
    p.add_argument("--metric", choices=["half", "hop"], default="half")

    p = graph_cmd("scaled", cmd_scaled, "scaled hyperbolicity H_R")
    p.add_argument("--R", type=int, required=True)
    p.add_argument("--cap", type=int, default=10000)

    p = sub.add_parser("repro", help="run the acceptance scenarios")
    p.add_argument("--scale", choices=["smoke", "desk"], default="smoke")
    p.add_argument("--only")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_repro)

    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (GraphError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
