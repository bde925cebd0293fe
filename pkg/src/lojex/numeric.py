"""Floating-point cross-checks.

``estimate_exponent`` samples ``|grad p|`` on Euclidean circles of
geometrically shrinking radius and fits ``log min |grad p|`` against
``log r``; the slope estimates the Lojasiewicz exponent.
``check_weighted_bounds`` samples the weighted spheres ``rho(x) = r``,
``rho(x) = (|x1|^(2/w1) + |x2|^(2/w2))^(1/2)``, and reports the extremes of
``|grad_w p|_w / rho^d`` where ``|grad_w p|_w^2 = sum (rho^wi dp/dxi)^2``.

Equi-angular sampling alone cannot see the exponent when the minimum sits
on a curve tangent to an axis (width of order ``r^k`` radians), so each
circle minimum is polished by a beam zoom around the best sampled local
minima.  Points near a base angle ``c`` are produced by rotating
``(cos c, sin c)`` by a small ``delta`` so that tiny offsets keep full
relative precision.
"""

from __future__ import annotations

import logging
import math
import warnings
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy import stats

from .bipoly import BiPoly
from .wfilter import WeightError, WeightSystem, infer_weights, weighted_degree

__all__ = [
    "DEFAULT_SEED",
    "NumericError",
    "EstimateConfig",
    "EstimateReport",
    "eval_grad",
    "min_grad_on_circle",
    "estimate_exponent",
    "check_weighted_bounds",
]

log = logging.getLogger(__name__)

DEFAULT_SEED = 0x5EED
UNDERFLOW_FLOOR = 1e-300

_BEAM = 4
_ZOOM_POINTS = 33
_ZOOM_FLOOR = 1e-200
_ZOOM_PATIENCE = 6
_BASINS = 8


class NumericError(ValueError):
    pass


@dataclass(frozen=True)
class EstimateConfig:
    r0: float = 0.1
    gamma: float = 0.5
    num_radii: int = 8
    samples_per_circle: int = 4096
    seed: int = DEFAULT_SEED
    refine: bool = True

    def __post_init__(self):
        if not self.r0 > 0:
            raise ValueError("r0 must be positive")
        if not 0 < self.gamma < 1:
            raise ValueError("gamma must lie in (0, 1)")
        if self.num_radii < 3:
            raise ValueError("num_radii must be at least 3")
        if self.samples_per_circle < 64:
            raise ValueError("samples_per_circle must be at least 64")
        if not self.r0 * self.gamma ** (self.num_radii - 1) > 1e-12:
            raise ValueError("smallest radius falls below the double-precision floor 1e-12")

    def radii(self) -> list[float]:
        return [self.r0 * self.gamma**k for k in range(self.num_radii)]

    def angle_offset(self) -> float:
        """Seeded rotation of the sample grid, less than half a spacing."""
        u = np.random.default_rng(self.seed).random()
        return 0.5 * u * (2 * math.pi / self.samples_per_circle)


@dataclass
class EstimateReport:
    radii: list[float]
    minima: list[float]
    fitted_slope: float
    slope_stderr: float
    intercept: float
    weighted_ratio_min: float | None = None
    weighted_ratio_max: float | None = None
    dropped: list[float] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "radii": self.radii,
            "minima": self.minima,
            "fitted_slope": self.fitted_slope,
            "slope_stderr": self.slope_stderr,
            "intercept": self.intercept,
            "weighted_ratio_min": self.weighted_ratio_min,
            "weighted_ratio_max": self.weighted_ratio_max,
            "dropped_radii": self.dropped,
        }


class _Gradient:
    """Vectorised float evaluation of both partials, terms in canonical order."""

    def __init__(self, p: BiPoly):
        self.parts = []
        for axis in (1, 2):
            items = p.derivative(axis).canonical_items()
            self.parts.append((
                np.array([a for (a, _), _ in items], dtype=float),
                np.array([b for (_, b), _ in items], dtype=float),
                np.array([float(c) for _, c in items], dtype=float),
            ))

    def __call__(self, x: np.ndarray, y: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        x = np.asarray(x, dtype=float)[..., None]
        y = np.asarray(y, dtype=float)[..., None]
        out = []
        with np.errstate(over="ignore", invalid="ignore"):
            for a, b, c in self.parts:
                if c.size == 0:
                    out.append(np.zeros(x.shape[:-1]))
                else:
                    out.append(np.sum(c * x**a * y**b, axis=-1))
        g1, g2 = out
        if not (np.all(np.isfinite(g1)) and np.all(np.isfinite(g2))):
            raise OverflowError("gradient evaluation overflowed")
        return g1, g2

    def norm(self, x, y) -> np.ndarray:
        return np.hypot(*self(x, y))


def eval_grad(p: BiPoly, point: tuple[float, float]) -> tuple[float, float]:
    """Double-precision ``(dp/dx1, dp/dx2)`` at ``point``."""
    x, y = (float(v) for v in point)
    if not (math.isfinite(x) and math.isfinite(y)):
        raise ValueError("coordinates must be finite")
    result = []
    for axis in (1, 2):
        acc = 0.0
        for (a, b), c in p.derivative(axis).canonical_items():
            try:
                term = float(c) * x**a * y**b
            except OverflowError:
                term = math.inf
            if not math.isfinite(term):
                raise OverflowError(f"overflow evaluating monomial {c}*x1^{a}*x2^{b} of dp/dx{axis}")
            acc += term
        if not math.isfinite(acc):
            raise OverflowError(f"overflow summing dp/dx{axis}")
        result.append(acc)
    return result[0], result[1]


# f(cos, sin) -> values on the unit circle parametrisation
CircleFunction = Callable[[np.ndarray, np.ndarray], np.ndarray]


def _local_minima(values: np.ndarray, cyclic: bool) -> np.ndarray:
    left = np.roll(values, 1)
    right = np.roll(values, -1)
    mask = (values <= left) & (values <= right)
    if not cyclic:
        mask[0] = values[0] <= values[1]
        mask[-1] = values[-1] <= values[-2]
    return np.flatnonzero(mask)


def _zoom(func: CircleFunction, angle: float, half_width: float) -> float:
    """Beam zoom for the smallest value of ``func`` within ``angle +- half_width``.

    Every beam member keeps its own base point on the circle and is rebased
    after each level, so the offsets stay small and keep full precision even
    when the basin is far narrower than the spacing of representable angles.
    """
    bases = [(math.cos(angle), math.sin(angle))]
    h = half_width
    best = math.inf
    grid = np.linspace(-1.0, 1.0, _ZOOM_POINTS)
    stale = 0
    while h > _ZOOM_FLOOR and stale < _ZOOM_PATIENCE:
        cd, sd = np.cos(h * grid), np.sin(h * grid)
        picks = []
        level_best = math.inf
        for c, s in bases:
            vals = func(c * cd - s * sd, s * cd + c * sd)
            level_best = min(level_best, float(vals.min()))
            for k in _local_minima(vals, cyclic=False):
                picks.append((float(vals[k]), c * cd[k] - s * sd[k], s * cd[k] + c * sd[k]))
        stale = stale + 1 if not level_best < best * (1 - 1e-9) else 0
        best = min(best, level_best)
        picks.sort(key=lambda t: t[0])
        step = 2 * h / (_ZOOM_POINTS - 1)
        bases = []
        for _, c, s in picks:
            if all(math.hypot(c - c0, s - s0) > step for c0, s0 in bases):
                bases.append((c, s))
            if len(bases) == _BEAM:
                break
        h = 2 * step
    return best


def _sample_circle(
    func: CircleFunction, n: int, offset: float, refine: bool
) -> tuple[float, np.ndarray]:
    """Minimum of ``func`` over n jittered equi-angular samples, optionally polished."""
    spacing = 2 * math.pi / n
    theta = offset + spacing * np.arange(n)
    vals = func(np.cos(theta), np.sin(theta))
    best = float(vals.min())
    if refine:
        idx = _local_minima(vals, cyclic=True)
        idx = idx[np.argsort(vals[idx], kind="stable")][:_BASINS]
        for k in idx:
            best = min(best, _zoom(func, float(theta[k]), spacing))
    return best, vals


def min_grad_on_circle(
    p: BiPoly, r: float, cfg: EstimateConfig = EstimateConfig(), *, offset: float | None = None
) -> float:
    """Smallest Euclidean ``|grad p|`` found on the circle of radius ``r``."""
    if not r > 0:
        raise ValueError("radius must be positive")
    grad = _Gradient(p)
    off = cfg.angle_offset() if offset is None else offset
    best, _ = _sample_circle(lambda c, s: grad.norm(r * c, r * s), cfg.samples_per_circle, off, cfg.refine)
    return best


def _weighted_ratio(grad: _Gradient, ws: WeightSystem, d: int, x1, x2) -> np.ndarray:
    rho = np.hypot(np.abs(x1) ** (1.0 / ws.w1), np.abs(x2) ** (1.0 / ws.w2))
    g1, g2 = grad(x1, x2)
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.hypot(rho**ws.w1 * g1, rho**ws.w2 * g2) / rho**d


def estimate_exponent(
    p: BiPoly, cfg: EstimateConfig = EstimateConfig(), ws: WeightSystem | None = None
) -> EstimateReport:
    """Log-log slope of circle minima of ``|grad p|`` over the radius ladder."""
    if p.constant_term():
        raise NumericError("polynomial must vanish at the origin")
    grad = _Gradient(p)
    if ws is None:
        try:
            ws = infer_weights(p)
        except WeightError:
            ws = None
    d_w = weighted_degree(p, ws.weights) if ws is not None else None

    off = cfg.angle_offset()
    radii, minima, dropped = [], [], []
    rmin, rmax = math.inf, -math.inf
    for r in cfg.radii():
        m, _ = _sample_circle(lambda c, s: grad.norm(r * c, r * s), cfg.samples_per_circle, off, cfg.refine)
        if ws is not None:
            theta = off + 2 * math.pi / cfg.samples_per_circle * np.arange(cfg.samples_per_circle)
            ratio = _weighted_ratio(grad, ws, d_w, r * np.cos(theta), r * np.sin(theta))
            rmin, rmax = min(rmin, float(ratio.min())), max(rmax, float(ratio.max()))
        if not m > UNDERFLOW_FLOOR:
            warnings.warn(f"circle minimum {m!r} at r={r:g} is zero or underflows; rung dropped")
            dropped.append(r)
            continue
        radii.append(r)
        minima.append(m)

    if len(radii) < 2:
        raise NumericError("degenerate or underflow: fewer than two usable radii")
    fit = stats.linregress(np.log(radii), np.log(minima))
    log.debug("slope %.6f +- %.2g over %d radii", fit.slope, fit.stderr, len(radii))
    return EstimateReport(
        radii=radii,
        minima=minima,
        fitted_slope=float(fit.slope),
        slope_stderr=float(fit.stderr),
        intercept=float(fit.intercept),
        weighted_ratio_min=rmin if ws is not None else None,
        weighted_ratio_max=rmax if ws is not None else None,
        dropped=dropped,
    )


def check_weighted_bounds(
    p: BiPoly, ws: WeightSystem, cfg: EstimateConfig = EstimateConfig()
) -> tuple[float, float]:
    """Extremes of ``|grad_w p|_w / rho^d`` over the weighted spheres of the ladder."""
    grad = _Gradient(p)
    off = cfg.angle_offset()
    lo, hi = math.inf, -math.inf
    for r in cfg.radii():
        s1, s2 = r**ws.w1, r**ws.w2

        def ratio(c, s, s1=s1, s2=s2):
            # (sgn c |c|^w1, sgn s |s|^w2) lies on rho = 1; scale it onto rho = r
            x1 = s1 * np.sign(c) * np.abs(c) ** ws.w1
            x2 = s2 * np.sign(s) * np.abs(s) ** ws.w2
            return _weighted_ratio(grad, ws, ws.d, x1, x2)

        m, vals = _sample_circle(ratio, cfg.samples_per_circle, off, cfg.refine)
        lo, hi = min(lo, m), max(hi, float(vals.max()))
    return lo, hi
