import math

import numpy as np
import pytest

from tvlink import asymptotics as asy
from tvlink import jones as jn
from tvlink.qarith import Flavor, RootContext
from tvlink.triangulate import load_fixture


def test_lobachevsky_special_values():
    assert asy.lobachevsky(0.0) == 0.0
    assert abs(asy.lobachevsky(math.pi / 2)) < 1e-15
    assert abs(asy.lobachevsky(math.pi)) < 1e-15
    assert asy.lobachevsky(math.pi / 6) == pytest.approx(0.5074708032048268,
                                                         abs=1e-12)


def test_lobachevsky_symmetries():
    th = np.linspace(-4.0, 4.0, 4001)
    odd = asy.lobachevsky(-th) + asy.lobachevsky(th)
    periodic = asy.lobachevsky(th + math.pi) - asy.lobachevsky(th)
    assert np.abs(odd).max() < 1e-12
    assert np.abs(periodic).max() < 1e-12


def test_lobachevsky_half_angle_identity():
    th = np.linspace(0.0, math.pi, 2001)
    lhs = asy.lobachevsky(th + math.pi / 2)
    rhs = 0.5 * asy.lobachevsky(2 * th) - asy.lobachevsky(th)
    assert np.abs(lhs - rhs).max() < 1e-11


def test_lobachevsky_maximum_at_pi_over_6():
    th = np.linspace(0.0, math.pi, 100001)
    vals = asy.lobachevsky(th)
    assert vals.max() <= asy.lobachevsky(math.pi / 6) + 1e-12


def test_volume_constants():
    v = asy.VOLUMES
    assert v.v3 == pytest.approx(1.0149416064096537, abs=1e-12)
    assert v.vol_fig8 == pytest.approx(2.0298832128193074, abs=1e-12)
    assert v.v8 == pytest.approx(3.6638623767088765, abs=1e-12)
    assert v.vol_borromean == pytest.approx(2 * v.v8, abs=1e-15)
    assert v.vol_fig8 == pytest.approx(4 * v.lambda_pi_6, abs=1e-15)


def test_f_alpha_theta_special_points():
    v8 = asy.VOLUMES.v8
    assert asy.f_alpha_theta(0.0, 3 * math.pi / 4) == pytest.approx(-v8 / 3,
                                                                    abs=1e-12)
    for alpha in (0.0, 0.4, 2.0):
        assert abs(asy.f_alpha_theta(alpha, 0.0)) < 1e-14
    # array input
    grid = asy.f_alpha_theta(np.zeros(3), np.array([0.0, math.pi / 2, 3 * math.pi / 4]))
    assert grid.shape == (3,)


def test_qfact_log_residual_small_at_j1():
    for r in (51, 101, 201):
        ctx = RootContext(r, Flavor.SO3_2R)
        # single-factor case: log{1} + (r/2pi) L(2pi/r), both O(log r)
        assert abs(asy.qfact_log_residual(ctx, 1)) < 2 * math.log(r)
    with pytest.raises(ValueError):
        asy.qfact_log_residual(RootContext(51, Flavor.SO3_2R), 51)


def test_growth_series_validation():
    with pytest.raises(ValueError):
        asy.growth_series(jn.Unknot(), [5, 6, 7])
    with pytest.raises(ValueError):
        asy.growth_series(jn.Unknot(), [7, 5])


def test_growth_series_no_fit_under_four_rows():
    series = asy.growth_series(jn.Unknot(), [5, 7, 9])
    assert series.a is None
    assert len(series.rows) == 3


def test_growth_series_rows_and_csv():
    series = asy.growth_series(jn.Unknot(), [5, 7, 9, 11, 13, 15])
    for r, log_tv, y in series.rows:
        assert y == pytest.approx(2 * math.pi * log_tv / r)
    csv = series.to_csv()
    assert csv.splitlines()[0] == "r,log_tv,y_r"
    assert len(csv.splitlines()) == 7
    assert series.fitted_limit == series.a
    assert '"residual"' in series.fit_to_json()


def test_growth_series_statesum_path_matches_jones_path():
    tri = load_fixture("fig8")
    rs = [5, 7, 9, 11]
    by_tri = asy.growth_series(tri, rs)
    by_link = asy.growth_series(jn.FigureEight(), rs)
    assert by_tri.label == "fig8"
    for a, b in zip(by_tri.rows, by_link.rows):
        assert a[1] == pytest.approx(b[1], rel=1e-9)


def test_growth_series_threads_agree():
    rs = [5, 7, 9, 11, 13]
    one = asy.growth_series(jn.Torus(2, 3), rs, threads=1)
    four = asy.growth_series(jn.Torus(2, 3), rs, threads=4)
    for a, b in zip(one.rows, four.rows):
        assert a == b


def test_fig8_top_color_dominates():
    """The i = m term of the figure-eight color sum is the largest, and
    each per-color contribution stays under the volume plus a slack that
    shrinks with r."""
    from tvlink import bridge
    for r in range(121, 302, 10):
        ctx = RootContext(r, Flavor.SO3_2R)
        logs = bridge.fig8_log_scan(ctx, ctx.m)
        assert logs.argmax() == ctx.m - 1
        top = 2 * math.pi / r * 2 * logs.max()
        assert top <= asy.VOLUMES.vol_fig8 + 0.5


def test_fit_recovers_synthetic_model():
    rows = [(r, 0.0, 2.0 + 3.0 * math.log(r) / r + 1.0 / r)
            for r in range(51, 200, 2)]
    (a, b, c), rms = asy._fit_tail(rows)
    assert a == pytest.approx(2.0, abs=1e-9)
    assert b == pytest.approx(3.0, abs=1e-6)
    assert c == pytest.approx(1.0, abs=1e-5)
    assert rms < 1e-12
