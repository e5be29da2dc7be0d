import json

import pytest

from hollowpoly.classify import is_hollow, is_simplicial
from hollowpoly.exactgeo import convex_hull
from hollowpoly.search import (
    TheoremViolation,
    _guard,
    ball_scaling_experiment,
    bound_audit_suite,
    doubling_range,
    extremal_hollow_search,
)


def test_exhaustive_small_boxes():
    for m in (1, 2, 3):
        rep = extremal_hollow_search(2, m)
        assert rep.summary["max_vertices"] == 4 and not rep.partial
        assert rep.records[0]["points"] == [[0, 0], [0, 1], [1, 0], [1, 1]]
        for rec in rep.records:
            hull = convex_hull([tuple(p) for p in rec["points"]])
            assert is_hollow(hull) and is_simplicial(hull) and rec["hollow"] and rec["simplicial"]


def test_exhaustive_budget_marks_partial():
    rep = extremal_hollow_search(2, 3, budget=10)
    assert rep.partial


def test_exhaustive_limits():
    with pytest.raises(ValueError):
        extremal_hollow_search(3, 2)
    with pytest.raises(ValueError):
        extremal_hollow_search(2, 5)


def test_stochastic_is_seeded():
    with pytest.raises(ValueError):
        extremal_hollow_search(3, 3, "stochastic", budget=10)
    a = extremal_hollow_search(3, 3, "stochastic", budget=300, seed=4)
    b = extremal_hollow_search(3, 3, "stochastic", budget=300, seed=4)
    assert json.dumps(a.to_dict(), sort_keys=True) == json.dumps(b.to_dict(), sort_keys=True)
    assert a.summary["best_vertices"] >= 6 and a.partial
    for rec in a.records:
        assert rec["hollow"] and rec["simplicial"] and rec["vertices"] <= 8


def test_theorem_guard(tmp_path):
    _guard([(0, 0)] * 4, 2)
    with pytest.raises(TheoremViolation) as exc:
        _guard([(i, 0) for i in range(5)], 2, tmp_path)
    dump = json.loads(exc.value.dump_path.read_text())
    assert dump["d"] == 2 and len(dump["points"]) == 5


def test_doubling_range():
    assert doubling_range(17, 257) == [17, 33, 65, 129, 257]
    assert doubling_range(5, 65) == [5, 9, 17, 33, 65]


def test_ball_scaling_contract():
    with pytest.raises(ValueError):
        ball_scaling_experiment(2, 17, 17)
    rep = ball_scaling_experiment(3, 0, 0, ks=[3, 5, 7, 9, 11])
    s = rep.summary
    assert s["reference_exponent"] == "3/2" and len(s["residuals_approx"]) == 5
    assert isinstance(s["slope_approx"], float)


def test_bound_audit_rows():
    rep = bound_audit_suite(4, 4)
    rows = rep.records
    cube3 = next(r for r in rows if r["construction"] == "doignon_cube" and r["params"] == {"d": 3})
    assert cube3["vertices"] == 8 and cube3["bounds"][0]["ratio"] == "1"
    grid = next(r for r in rows if r["construction"] == "hypercube_k" and r["params"] == {"k": 4, "d": 2})
    assert grid["lattice_points"] == 16
    cross5 = next(r for r in rows if r["construction"] == "cross_in_cube" and r["params"] == {"d": 5})
    assert cross5["vertices"] == 10
    assert rep.summary["all_exact_claims_hold"]
