import itertools
import math

import numpy as np
import pytest

from tvlink import bridge
from tvlink import jones as jn
from tvlink.qarith import Flavor, RootContext, eta_prime
from tvlink.triangulate import load_fixture


def test_fig8_scan_matches_pointwise():
    for flavor, r in ((Flavor.SO3_2R, 13), (Flavor.SU2_4R, 10)):
        ctx = RootContext(r, flavor)
        hi = ctx.m if flavor is Flavor.SO3_2R else r - 1
        scan = bridge.fig8_log_scan(ctx, hi)
        for i in range(1, hi + 1):
            direct = abs(jn.jones_eval(ctx, jn.FigureEight(), (i,)))
            assert scan[i - 1] == pytest.approx(math.log(direct), abs=1e-9)


def test_torus_scan_matches_pointwise():
    for flavor, r in ((Flavor.SO3_2R, 11), (Flavor.SU2_4R, 9)):
        ctx = RootContext(r, flavor)
        scan = bridge.torus_values_scan(ctx, 3, 4, 6)
        for i in range(1, 7):
            assert scan[i - 1] == pytest.approx(jn.jones_torus(ctx, 3, 4, i),
                                                abs=1e-10)


def test_knot_values_scan_families():
    ctx = RootContext(11, Flavor.SO3_2R)
    for text in ("unknot", "torus(2,5)", "connsum(torus(2,3),torus(2,3))",
                 "cable(2,3,torus(2,3))", "cable(2,3,unknot)"):
        link = jn.parse_link(text)
        scan = bridge.knot_values_scan(ctx, link, 5)
        for i in range(1, 6):
            assert scan[i - 1] == pytest.approx(jn.jones_eval(ctx, link, (i,)),
                                                abs=1e-9)
    with pytest.raises(ValueError):
        bridge.knot_values_scan(ctx, jn.FigureEight(), 3)


def test_knot_log_scan_fallback():
    ctx = RootContext(9, Flavor.SO3_2R)
    link = jn.parse_link("cable(2,3,fig8)")     # exponential base: slow path
    scan = bridge.knot_log_scan(ctx, link, 4)
    for i in range(1, 5):
        direct = abs(jn.jones_eval(ctx, link, (i,)))
        assert scan[i - 1] == pytest.approx(math.log(direct), abs=1e-9)


def test_fig8_precise_scan_matches_float():
    for r in (11, 21, 31):
        ctx = RootContext(r, Flavor.SU2_4R)
        a = bridge.fig8_log_scan_precise(ctx, r - 1)
        b = bridge.fig8_log_scan(ctx, r - 1)
        assert np.abs(a - b).max() < 1e-6


def test_borromean_sq_sum_log_vs_bruteforce():
    for r in (7, 11):
        ctx = RootContext(r, Flavor.SO3_2R)
        m = ctx.m
        fast = bridge.borromean_sq_sum_log(ctx, m)
        brute = math.log(math.fsum(
            abs(jn.jones_borromean(ctx, k, l, n)) ** 2
            for k in range(1, m + 1) for l in range(1, m + 1)
            for n in range(1, m + 1)))
        assert fast == pytest.approx(brute, abs=1e-10)
    with pytest.raises(ValueError):
        bridge.borromean_sq_sum_log(RootContext(8, Flavor.SU2_4R), 3)
    with pytest.raises(ValueError):
        bridge.borromean_sq_sum_log(RootContext(7, Flavor.SO3_2R), 5)


def test_sq_sum_log_multicomponent():
    ctx = RootContext(7, Flavor.SO3_2R)
    link = jn.parse_link("split(fig8,borromean)")
    fast = bridge.sq_sum_log(ctx, link, ctx.m)
    brute = math.log(math.fsum(
        abs(jn.jones_eval(ctx, link, colors)) ** 2
        for colors in itertools.product(range(1, ctx.m + 1), repeat=4)))
    assert fast == pytest.approx(brute, abs=1e-10)


def test_flavor_guards():
    with pytest.raises(ValueError):
        bridge.tv_from_jones_su2(RootContext(7, Flavor.SO3_2R), jn.Unknot())
    with pytest.raises(ValueError):
        bridge.tv_from_jones_so3(RootContext(7, Flavor.SU2_4R), jn.Unknot())


def test_lower_bound_values():
    ctx = RootContext(7, Flavor.SO3_2R)
    assert bridge.lower_bound(ctx, jn.Unknot()) == pytest.approx(
        eta_prime(ctx) ** 2)
    assert bridge.lower_bound(ctx, jn.Borromean()) == pytest.approx(
        4 * eta_prime(ctx) ** 2)


def test_split_union_relation():
    """TV of a split union factors through eta'^2: the color sum of a
    2-component split union is the product of the component sums."""
    l1, l2 = jn.FigureEight(), jn.Torus(2, 3)
    for r in (5, 7, 9, 13):
        ctx = RootContext(r, Flavor.SO3_2R)
        lhs = bridge.tv_from_jones_so3(ctx, jn.SplitUnion(l1, l2)) / 2
        rhs = (bridge.tv_from_jones_so3(ctx, l1)
               * bridge.tv_from_jones_so3(ctx, l2) / eta_prime(ctx) ** 2)
        assert lhs == pytest.approx(rhs, rel=1e-9)


def test_verify_identity_negative_control():
    """The wrong triangulation must not match the color sum."""
    reports = bridge.verify_identity(jn.FigureEight(), load_fixture("s3"), [5])
    assert not reports[0].passed
    assert reports[0].rel_diff > 1e-3


def test_identity_report_serialization():
    rep = bridge.verify_identity(jn.FigureEight(), load_fixture("fig8"), [7])[0]
    d = rep.to_dict()
    assert d["pass"] is True
    assert d["r"] == 7
    assert '"lhs"' in rep.to_json()
