"""Experiment harness: extremal hollow simplicial searches, the ball-polytope
vertex scaling fit, and a table of constructions against the known bounds.

Experiments produce lower-bound witnesses and fitted numbers only; nothing
here settles an asymptotic question.  Any hollow simplicial polytope found
with more than ``2**d`` vertices aborts the run with :class:`TheoremViolation`.
"""

from __future__ import annotations

import itertools
import json
import logging
import math
import random
import statistics
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from hollowpoly import constructions as C
from hollowpoly.classify import is_empty_in_lattice, is_hollow, is_simplicial
from hollowpoly.exactgeo import HullStructure, LatticePoint, convex_hull
from hollowpoly.lattice import enumerate_lattice_points, locate
from hollowpoly.segments import longest_lattice_segment
from hollowpoly.width import lattice_width

log = logging.getLogger(__name__)


class TheoremViolation(RuntimeError):
    """A search produced a hollow simplicial polytope with more than 2^d vertices."""

    def __init__(self, points, dump_path=None):
        super().__init__(f"hollow simplicial polytope with {len(points)} vertices: {points}")
        self.points = points
        self.dump_path = dump_path


@dataclass
class ExperimentReport:
    experiment: str
    params: dict
    records: list = field(default_factory=list)
    summary: dict = field(default_factory=dict)
    seed: int | None = None
    partial: bool = False
    wall_time: float = 0.0  # informational; never serialized, reports must be reproducible

    def to_dict(self) -> dict:
        return {
            "experiment": self.experiment,
            "params": self.params,
            "seed": self.seed,
            "partial": self.partial,
            "records": self.records,
            "summary": self.summary,
        }


def approx(x: float) -> str:
    return f"{x:.6g}"


def _guard(points, d: int, dump_dir=None):
    if len(points) > 2 ** d:
        path = None
        if dump_dir is not None:
            path = Path(dump_dir) / "theorem_violation.json"
            path.write_text(json.dumps({"d": d, "points": [list(p) for p in points]}))
        log.error("theorem violation: %s", points)
        raise TheoremViolation(list(points), path)


def _canonical(points) -> tuple[LatticePoint, ...]:
    lo = [min(c) for c in zip(*points)]
    return tuple(sorted(tuple(a - b for a, b in zip(p, lo)) for p in points))


def _exhaustive(d: int, m: int, budget: int | None, report: ExperimentReport, dump_dir):
    """DFS over vertex sets in ``[0, m]^d``.

    Convex position and hollowness are both inherited by subsets, so a branch
    is cut as soon as either fails.  Sets are recorded up to translation.
    """
    box = list(itertools.product(range(m + 1), repeat=d))
    best = 0
    best_sets: set = set()
    nodes = 0
    partial = False

    def visit(chosen: list[LatticePoint], start: int):
        nonlocal best, best_sets, nodes, partial
        for i in range(start, len(box)):
            if budget is not None and nodes >= budget:
                partial = True
                return
            cand = chosen + [box[i]]
            nodes += 1
            hull = convex_hull(cand)
            if hull.num_vertices != len(cand):
                continue
            if hull.full_dimensional:
                if not is_hollow(hull):
                    continue
                if is_simplicial(hull):
                    _guard(cand, d, dump_dir)
                    if len(cand) > best:
                        best, best_sets = len(cand), set()
                    if len(cand) == best:
                        best_sets.add(_canonical(cand))
            visit(cand, i + 1)

    visit([], 0)
    report.partial = partial
    for s in sorted(best_sets):
        report.records.append({"vertices": len(s), "points": [list(p) for p in s]})
    report.summary.update({"max_vertices": best, "maximizers_up_to_translation": len(best_sets),
                           "nodes": nodes, "upper_bound_2^d": 2 ** d})


def _seed_set(d: int) -> list[LatticePoint]:
    return C.cross_in_cube(d) if d >= 3 else C.doignon_cube(d)


def _stochastic(d, m, budget, seed, report: ExperimentReport, dump_dir):
    """Hill-climb on generator sets scored by the vertex count of their hull.

    Proposals are uniform over add / delete / move-by-unit-vector; a proposal
    is accepted when the hull stays full-dimensional, hollow and simplicial
    with at least as many vertices.  A delete therefore only survives when it
    drops a point that is not needed as a vertex.
    """
    rng = random.Random(seed)
    current = tuple(sorted(_seed_set(d)))
    cache: dict = {}

    def score(pts) -> int:
        key = tuple(sorted(set(pts)))
        if key not in cache:
            hull = convex_hull(key)
            good = hull.full_dimensional and is_hollow(hull) and is_simplicial(hull)
            cache[key] = hull.num_vertices if good else -1
        return cache[key]

    cur_score = score(current)
    if cur_score < 0:
        raise ValueError("seed configuration is not hollow simplicial")
    best, best_score = current, cur_score
    accepted = 0
    for _ in range(budget):
        move = rng.choice(("add", "delete", "move"))
        if move == "add":
            p = tuple(rng.randint(0, m) for _ in range(d))
            if p in current:
                continue
            cand = current + (p,)
        elif move == "delete":
            if len(current) <= d + 1:
                continue
            i = rng.randrange(len(current))
            cand = current[:i] + current[i + 1:]
        else:
            i = rng.randrange(len(current))
            axis = rng.randrange(d)
            p = list(current[i])
            p[axis] += rng.choice((-1, 1))
            if not 0 <= p[axis] <= m or tuple(p) in current:
                continue
            cand = current[:i] + (tuple(p),) + current[i + 1:]
        sc = score(cand)
        if sc < cur_score:
            continue
        current, cur_score = tuple(sorted(cand)), sc
        accepted += 1
        if sc > best_score:
            best, best_score = current, sc
            _guard(convex_hull(best).vertices, d, dump_dir)
    verts = convex_hull(best).vertices
    report.partial = True  # a heuristic never certifies a maximum
    report.records.append({"vertices": len(verts), "points": [list(p) for p in verts]})
    report.summary.update({"best_vertices": len(verts), "accepted_moves": accepted,
                           "evaluated_sets": len(cache), "lower_bound_2d": 2 * d,
                           "upper_bound_2^d": 2 ** d})


def extremal_hollow_search(d: int, m: int, mode: str = "exhaustive", budget: int | None = None,
                           seed: int | None = None, dump_dir=None) -> ExperimentReport:
    """Largest hollow simplicial lattice polytope with vertices in ``[0, m]^d``.

    ``exhaustive`` (d = 2, m <= 4) visits every vertex set, ``budget`` capping
    the number of sets tried.  ``stochastic`` hill-climbs from the
    cross-polytope (d >= 3) or unit square for ``budget`` proposals.
    """
    t0 = time.perf_counter()
    report = ExperimentReport("extremal_hollow_search",
                              {"d": d, "box": m, "mode": mode, "budget": budget}, seed=seed)
    if mode == "exhaustive":
        if d != 2 or not 1 <= m <= 4:
            raise ValueError("exhaustive search is limited to d = 2 and box sizes 1..4")
        _exhaustive(d, m, budget, report, dump_dir)
    elif mode == "stochastic":
        if seed is None:
            raise ValueError("stochastic search needs an explicit seed")
        if not 2 <= d <= 4 or m < 1:
            raise ValueError("stochastic search supports d = 2..4 and box >= 1")
        _stochastic(d, m, budget if budget is not None else 10_000, seed, report, dump_dir)
    else:
        raise ValueError(f"unknown search mode {mode!r}")
    for rec in report.records:
        pts = [tuple(p) for p in rec["points"]]
        hull = convex_hull(pts)
        rec["hollow"] = bool(is_hollow(hull))
        rec["simplicial"] = bool(is_simplicial(hull))
        rec["empty"] = bool(is_empty_in_lattice(pts))
    report.wall_time = time.perf_counter() - t0
    return report


def _column_extremes(points):
    """Points extreme in the last coordinate on their vertical line; same hull as the input."""
    col: dict = {}
    for p in points:
        key = p[:-1]
        if key in col:
            lo, hi = col[key]
            col[key] = (min(lo, p), max(hi, p))
        else:
            col[key] = (p, p)
    return sorted({q for pair in col.values() for q in pair})


def doubling_range(k_min: int, k_max: int) -> list[int]:
    """k_min, 2(k_min - 1) + 1, ... up to k_max (e.g. 17, 33, 65, 129, 257)."""
    if k_min < 2:
        raise ValueError("k_min must be >= 2")
    ks = []
    k = k_min
    while k <= k_max:
        ks.append(k)
        k = 2 * (k - 1) + 1
    return ks


def ball_scaling_experiment(d: int, k_min: int, k_max: int, ks=None) -> ExperimentReport:
    """Fit log(#vertices) against log(k) for the lattice points of the radius-(k-1)/2 ball."""
    if d not in (2, 3):
        raise ValueError("ball scaling runs for d = 2 or 3")
    ks = sorted(ks) if ks is not None else doubling_range(k_min, k_max)
    if len(ks) < 5:
        raise ValueError(f"need at least 5 values of k for a fit, got {len(ks)}")
    t0 = time.perf_counter()
    ref = Fraction((d - 1) * d, d + 1)
    report = ExperimentReport("ball_scaling", {"d": d, "ks": ks})
    xs, ys = [], []
    for k in ks:
        pts = C.ball_polytope(k, d)
        hull = convex_hull(_column_extremes(pts))
        n = hull.num_vertices
        report.records.append({"k": k, "lattice_points": len(pts), "vertices": n,
                               "upper_rate_k^(d-1)": k ** (d - 1)})
        xs.append(math.log(k))
        ys.append(math.log(n))
    slope, intercept = statistics.linear_regression(xs, ys)
    residuals = [y - (slope * x + intercept) for x, y in zip(xs, ys)]
    report.summary = {
        "slope_approx": round(slope, 6),
        "intercept_approx": approx(intercept),
        "residuals_approx": [approx(r) for r in residuals],
        "reference_exponent": str(ref),
        "upper_bound_exponent": d - 1,
    }
    report.wall_time = time.perf_counter() - t0
    return report


def _bound(expr: str, value, measured, kind: str) -> dict:
    entry = {"expression": expr, "kind": kind}
    if isinstance(value, (int, Fraction)):
        entry["value"] = str(value)
        entry["ratio"] = str(Fraction(measured) / value) if value else None
    else:
        entry["value_approx"] = approx(value)
        entry["ratio_approx"] = approx(measured / value) if value else None
    return entry


def _row(name: str, params: dict, points, claims: dict, bounds: list, with_width=True) -> dict:
    hull = convex_hull(points)
    row = {
        "construction": name,
        "params": params,
        "vertices": hull.num_vertices,
        "lattice_points": len(enumerate_lattice_points(hull)),
        "longest_segment": longest_lattice_segment(hull).length,
    }
    if with_width and hull.full_dimensional:
        row["lattice_width"] = str(lattice_width(hull).value)
    row["bounds"] = bounds
    row["claims"] = claims
    return row


def bound_audit_suite(d_max: int = 4, k_max: int = 6) -> ExperimentReport:
    """Constructions and search winners next to the bound expressions.

    Exact claims (2^d, 2d, k^d, k-1, n+d-2, width d) are verified and listed
    under ``claims``; asymptotic bounds with unknown constants only get ratios.
    """
    if not 2 <= d_max <= 6 or not 2 <= k_max <= 8:
        raise ValueError("bound audit supports d_max in 2..6 and k_max in 2..8")
    t0 = time.perf_counter()
    rep = ExperimentReport("bound_audit", {"d_max": d_max, "k_max": k_max})
    rows = rep.records
    for d in range(2, d_max + 1):
        pts = C.doignon_cube(d)
        n = len(pts)
        rows.append(_row("doignon_cube", {"d": d}, pts,
                         {"empty": bool(is_empty_in_lattice(pts)), "vertices=2^d": n == 2 ** d},
                         [_bound("2^d", 2 ** d, n, "exact")], with_width=d <= 4))
    for d in range(2, d_max + 1):
        pts = C.unit_simplex(d)
        rows.append(_row("unit_simplex", {"d": d}, pts,
                         {"hollow": bool(is_hollow(pts)), "vertices=d+1": len(pts) == d + 1},
                         [_bound("d+1", d + 1, len(pts), "exact")]))
    for d in range(3, max(d_max, 5) + 1):
        pts = C.cross_in_cube(d)
        hull = convex_hull(pts)
        rows.append(_row("cross_in_cube", {"d": d}, pts,
                         {"hollow": bool(is_hollow(hull)), "simplicial": bool(is_simplicial(hull)),
                          "vertices=2d": hull.num_vertices == 2 * d},
                         [_bound("2d", 2 * d, hull.num_vertices, "exact"),
                          _bound("2^d", 2 ** d, hull.num_vertices, "exact")], with_width=d <= 4))
    for d in range(2, d_max + 1):
        pts = C.dilated_simplex(d)
        hull = convex_hull(pts)
        w = lattice_width(hull).value
        bounds = [_bound("d", d, w, "exact")]
        if d >= 2:
            bounds.append(_bound("d*(log d)^3", d * math.log(d) ** 3, float(w), "asymptotic"))
        rows.append(_row("dilated_simplex", {"d": d}, pts,
                         {"hollow": bool(is_hollow(hull)), "lattice_width=d": w == d}, bounds))
    for d in range(3, d_max + 1):
        for n in range(3, 7):
            pts = C.polygon_lift(n, d)
            hull = convex_hull(pts)
            face_ok = all(locate(hull, q).face_dim <= 2 for q in enumerate_lattice_points(hull))
            rows.append(_row("polygon_lift", {"n": n, "d": d}, pts,
                             {"vertices=n+d-2": hull.num_vertices == n + d - 2,
                              "lattice_face_dim<=2": face_ok},
                             [_bound("n+d-2", n + d - 2, hull.num_vertices, "exact")], with_width=False))
    for d in range(2, min(d_max, 3) + 1):
        for k in range(2, k_max + 1):
            pts = C.hypercube_k(k, d)
            hull = convex_hull(pts)
            seg = longest_lattice_segment(hull).length
            npts = len(enumerate_lattice_points(hull))
            rows.append(_row("hypercube_k", {"k": k, "d": d}, pts,
                             {"lattice_points=k^d": npts == k ** d, "longest_segment=k-1": seg == k - 1},
                             [_bound("k^d", k ** d, npts, "exact")]))
        for k in range(2, k_max + 1):
            pts = C.ball_polytope(k, d)
            hull = convex_hull(pts)
            seg = longest_lattice_segment(hull).length
            npts = len(enumerate_lattice_points(hull))
            rows.append(_row("ball_polytope", {"k": k, "d": d}, pts,
                             {"longest_segment<k": seg < k, "lattice_points<=k^d": npts <= k ** d},
                             [_bound("k^d", k ** d, npts, "exact"),
                              _bound("k^(d-1)", float(k ** (d - 1)), float(hull.num_vertices), "asymptotic"),
                              _bound("k^((d-1)d/(d+1))", k ** ((d - 1) * d / (d + 1)),
                                     float(hull.num_vertices), "asymptotic")],
                             with_width=hull.full_dimensional))

    found = extremal_hollow_search(2, 2, "exhaustive")
    for rec in found.records[:1]:
        pts = [tuple(p) for p in rec["points"]]
        rows.append(_row("search:exhaustive", {"d": 2, "box": 2}, pts,
                         {"hollow": rec["hollow"], "simplicial": rec["simplicial"],
                          "vertices<=2^d": rec["vertices"] <= 4},
                         [_bound("2^d", 4, rec["vertices"], "exact")]))
    for d in range(3, min(d_max, 4) + 1):
        found = extremal_hollow_search(d, 2, "stochastic", budget=300, seed=0)
        rec = found.records[0]
        pts = [tuple(p) for p in rec["points"]]
        rows.append(_row("search:stochastic", {"d": d, "box": 2, "budget": 300, "seed": 0}, pts,
                         {"hollow": rec["hollow"], "simplicial": rec["simplicial"],
                          "vertices>=2d": rec["vertices"] >= 2 * d,
                          "vertices<=2^d": rec["vertices"] <= 2 ** d},
                         [_bound("2^d", 2 ** d, rec["vertices"], "exact"),
                          _bound("d^2*(log d)^3", d * d * math.log(d) ** 3, float(rec["vertices"]),
                                 "asymptotic")], with_width=False))

    failed = [(r["construction"], r["params"], c) for r in rows for c, ok in r["claims"].items() if not ok]
    rep.summary = {"rows": len(rows), "exact_claims_checked": sum(len(r["claims"]) for r in rows),
                   "failed_claims": failed, "all_exact_claims_hold": not failed}
    rep.wall_time = time.perf_counter() - t0
    return rep
