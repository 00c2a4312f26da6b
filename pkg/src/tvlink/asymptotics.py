#
# asymptotics.py
#
# Lobachevsky function, hyperbolic volume constants, and growth-rate
# series y_r = (2*pi/r) * log TV_r over odd r with extrapolation of the
# r -> infinity limit.  Also the two auxiliary quantities used to study
# the per-term growth of the Borromean color sum: the surface
# f(alpha, theta) whose minimum -v8/3 controls the largest term, and
# the log-residual comparing brace factorials {j}! against the
# Lobachevsky-function prediction.

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import mpmath
import numpy as np

from . import bridge, statesum
from .qarith import Flavor, RootContext, brace_factorial_log
from .triangulate import Triangulation

# Coefficients of the series
#   Lam(x) = x*(1 - log(2x)) + x * sum_{n>=1} zeta(2n)/(n*(2n+1)) * (x/pi)^(2n)
# valid for 0 <= x <= pi; after reduction to [0, pi/2] the ratio
# (x/pi)^2 <= 1/4 makes 40 terms good far beyond double precision.
_N_TERMS = 40
_SERIES = np.array([float(mpmath.zeta(2 * n)) / (n * (2 * n + 1))
                    for n in range(1, _N_TERMS + 1)])


def lobachevsky(theta):
    """The Lobachevsky function L(theta) = -int_0^theta log|2 sin u| du.

    Odd, pi-periodic, maximal at pi/6.  Accepts scalars or numpy arrays;
    absolute accuracy ~1e-15.
    """
    th = np.asarray(theta, dtype=float)
    scalar = th.ndim == 0
    x = np.mod(th, np.pi)                    # into [0, pi)
    flip = x > np.pi / 2                     # L(pi - x) = -L(x)
    x = np.where(flip, np.pi - x, x)
    u2 = (x / np.pi) ** 2
    p = np.zeros_like(u2)
    for c in _SERIES[::-1]:
        p = p * u2 + c
    with np.errstate(divide="ignore", invalid="ignore"):
        val = x * (1.0 - np.log(2.0 * x)) + x * p * u2
    val = np.where(x == 0.0, 0.0, val)
    val = np.where(flip, -val, val)
    return float(val) if scalar else val


@dataclass(frozen=True)
class VolumeConstants:
    """Named hyperbolic volumes, all derived from the Lobachevsky function."""
    lambda_pi_6: float     # maximum of the Lobachevsky function
    v3: float              # volume of the regular ideal tetrahedron = 2 L(pi/6)
    v8: float              # volume of the regular ideal octahedron = 8 L(pi/4)
    vol_fig8: float        # figure-eight complement = 2 v3
    vol_borromean: float   # Borromean rings complement = 2 v8


def _volume_constants():
    l6 = lobachevsky(math.pi / 6)
    v3 = 2.0 * l6
    v8 = 8.0 * lobachevsky(math.pi / 4)
    return VolumeConstants(l6, v3, v8, 2.0 * v3, 2.0 * v8)


VOLUMES = _volume_constants()


def f_alpha_theta(alpha, theta):
    """f(a, t) = L(a+t) - L(a-t) + (2/3) L(t) - (2/3) L(2t).

    Governs the exponential growth rate of one factor of a Borromean
    color-sum term; its global minimum is -v8/3, attained at a = 0 and
    t = 3 pi/4 (mod pi).  Accepts scalars or numpy arrays.
    """
    alpha = np.asarray(alpha, dtype=float)
    theta = np.asarray(theta, dtype=float)
    val = (lobachevsky(alpha + theta) - lobachevsky(alpha - theta)
           + (2.0 / 3.0) * lobachevsky(theta)
           - (2.0 / 3.0) * lobachevsky(2.0 * theta))
    return float(val) if np.ndim(val) == 0 else val


def qfact_log_residual(ctx, j):
    """log|{j}!| + (r/2pi) L(2 pi j / r): the deviation of the brace
    factorial from its Lobachevsky-function approximation, empirically
    O(log r) uniformly in j."""
    if not 0 < j < ctx.r:
        raise ValueError("need 0 < j < r, got j=%d" % j)
    return (brace_factorial_log(ctx, j).log_abs
            + ctx.r / (2.0 * math.pi) * lobachevsky(2.0 * math.pi * j / ctx.r))


# ---------------------------------------------------------------------------
# Growth series

@dataclass
class GrowthSeries:
    """Rows (r, log TV_r, y_r = (2 pi / r) log TV_r) over ascending odd r,
    plus a least-squares fit of y_r = a + b log(r)/r + c/r over the
    largest half of the r-range.  The fitted a estimates the limit."""
    label: str
    rows: list = field(default_factory=list)
    a: float = None
    b: float = None
    c: float = None
    residual: float = None   # rms of the fit over the fitted rows

    @property
    def fitted_limit(self):
        return self.a

    def to_csv(self):
        lines = ["r,log_tv,y_r"]
        lines += ["%d,%.12g,%.12g" % row for row in self.rows]
        return "\n".join(lines) + "\n"

    def fit_to_json(self):
        return json.dumps({"a": self.a, "b": self.b, "c": self.c,
                           "residual": self.residual})


def _fit_tail(rows):
    # least squares of y = a + b log(r)/r + c/r over the largest half
    sub = rows[len(rows) // 2:]
    r = np.array([row[0] for row in sub], dtype=float)
    y = np.array([row[2] for row in sub])
    design = np.column_stack([np.ones_like(r), np.log(r) / r, 1.0 / r])
    coef, *_ = np.linalg.lstsq(design, y, rcond=None)
    rms = float(np.sqrt(np.mean((design @ coef - y) ** 2)))
    return coef, rms


def log_tv_at(target, r):
    """log TV_r at the 2r-th principal root, via the color-sum path for
    a link expression or the state sum for a Triangulation."""
    ctx = RootContext(r, Flavor.SO3_2R)
    if isinstance(target, Triangulation):
        return math.log(statesum.tv(target, ctx).value)
    return bridge.tv_from_jones_so3_log(ctx, target)


def growth_series(target, r_list, label=None, threads=1):
    """GrowthSeries of TV_r(2r-th root) for ascending odd r.

    target is a link expression (evaluated through the color-sum
    formula, safe at large r) or a Triangulation (state sum; small r
    only).  With fewer than 4 rows no fit is attempted.
    """
    r_list = list(r_list)
    if any(r % 2 == 0 for r in r_list):
        raise ValueError("growth series needs odd r")
    if sorted(r_list) != r_list:
        raise ValueError("growth series needs ascending r")
    if label is None:
        from . import jones as jn
        label = (target.name if isinstance(target, Triangulation)
                 else jn.format_link(target))
    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            logs = list(pool.map(lambda r: log_tv_at(target, r), r_list))
    else:
        logs = [log_tv_at(target, r) for r in r_list]
    rows = [(r, lt, 2.0 * math.pi * lt / r) for r, lt in zip(r_list, logs)]
    series = GrowthSeries(label, rows)
    if len(rows) >= 4:
        (series.a, series.b, series.c), series.residual = _fit_tail(rows)
    return series
