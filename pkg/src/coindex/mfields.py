"""Similarity of sampled functions and fields with real, possibly negative, multiplicities.

A sampled function is read as a multiset whose elements are the grid points
and whose multiplicities are the function values. For two functions on the
same grid the pointwise contributions are

* intersection: ``sign(f) * sign(g) * min(|f|, |g|)``, i.e. ``+min`` where the
  signs agree (quadrants I and III of the ``(f, g)`` plane), ``-min`` where they
  differ (II and IV) and 0 where either value is 0;
* union: ``max(|f|, |g|)``.

Both are integrated with the trapezoidal rule. For non-negative inputs this is
the ordinary ``∫min / ∫max`` Jaccard index of two densities.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .prng import SplitMix64
from .set_core import EMPTY_VALUE, SimilarityError


@dataclass
class MFunction:
    """Uniform samples ``samples[i] = m(x0 + i*dx)``."""

    samples: np.ndarray
    dx: float = 1.0
    x0: float = 0.0

    def __post_init__(self):
        self.samples = np.asarray(self.samples, dtype=float)
        if self.samples.ndim != 1 or self.samples.size < 1:
            raise ValueError("MFunction samples must be a non-empty 1-D array")
        if not self.dx > 0:
            raise ValueError(f"dx must be positive, got {self.dx}")
        if not np.isfinite(self.samples).all():
            raise ValueError("MFunction samples must be finite")

    @property
    def x(self) -> np.ndarray:
        return self.x0 + self.dx * np.arange(self.samples.size)

    def __neg__(self) -> "MFunction":
        return MFunction(-self.samples, self.dx, self.x0)

    def scaled(self, c: float) -> "MFunction":
        return MFunction(c * self.samples, self.dx, self.x0)


@dataclass
class MField2D:
    """Samples on a rectangular grid; ``samples[row, col]`` is at ``(x0 + col*dx, y0 + row*dy)``."""

    samples: np.ndarray
    dx: float = 1.0
    dy: float = 1.0
    x0: float = 0.0
    y0: float = 0.0

    def __post_init__(self):
        self.samples = np.asarray(self.samples, dtype=float)
        if self.samples.ndim != 2 or self.samples.size < 1:
            raise ValueError("MField2D samples must be a non-empty 2-D array")
        if not (self.dx > 0 and self.dy > 0):
            raise ValueError("grid spacings must be positive")
        if not np.isfinite(self.samples).all():
            raise ValueError("MField2D samples must be finite")

    @property
    def height(self) -> int:
        return self.samples.shape[0]

    @property
    def width(self) -> int:
        return self.samples.shape[1]

    def __neg__(self) -> "MField2D":
        return MField2D(-self.samples, self.dx, self.dy, self.x0, self.y0)

    def scaled(self, c: float) -> "MField2D":
        return MField2D(c * self.samples, self.dx, self.dy, self.x0, self.y0)


def _check_common(f, g):
    if type(f) is not type(g):
        raise SimilarityError(f"cannot compare {type(f).__name__} with {type(g).__name__}")
    if f.samples.shape != g.samples.shape:
        raise SimilarityError(f"support mismatch: shapes {f.samples.shape} vs {g.samples.shape}")
    steps = [(f.dx, g.dx), (f.x0, g.x0)]
    if isinstance(f, MField2D):
        steps += [(f.dy, g.dy), (f.y0, g.y0)]
    for u, v in steps:
        if not math.isclose(u, v, rel_tol=1e-9, abs_tol=1e-12):
            raise SimilarityError(f"support mismatch: grid parameter {u} vs {v}")


def integrate(values: np.ndarray, f) -> float:
    """Trapezoidal integral of ``values`` sampled on the grid of ``f``."""
    if isinstance(f, MField2D):
        inner = np.trapezoid(values, dx=f.dx, axis=1) if values.shape[1] > 1 else values[:, 0] * 0.0
        return float(np.trapezoid(inner, dx=f.dy)) if values.shape[0] > 1 else 0.0
    return float(np.trapezoid(values, dx=f.dx)) if values.size > 1 else 0.0


def _pointwise(a: np.ndarray, b: np.ndarray):
    absmin = np.minimum(np.abs(a), np.abs(b))
    inter = np.sign(a) * np.sign(b) * absmin
    union = np.maximum(np.abs(a), np.abs(b))
    return inter, union


def signed_intersection(f, g) -> float:
    _check_common(f, g)
    inter, _ = _pointwise(f.samples, g.samples)
    return integrate(inter, f)


def abs_union(f, g) -> float:
    _check_common(f, g)
    _, union = _pointwise(f.samples, g.samples)
    return integrate(union, f)


def field_jaccard(f, g) -> float:
    """Signed Jaccard index of two sampled functions or fields, in [-1, 1].

    Returns ``EMPTY_VALUE`` when both inputs vanish everywhere.
    """
    _check_common(f, g)
    inter, union = _pointwise(f.samples, g.samples)
    den = integrate(union, f)
    if den == 0:
        return EMPTY_VALUE
    return integrate(inter, f) / den


def field_interiority(f, g) -> float:
    _check_common(f, g)
    if (f.samples < 0).any() or (g.samples < 0).any():
        raise SimilarityError("interiority is only defined for non-negative fields; use field_jaccard")
    smallest = min(integrate(f.samples, f), integrate(g.samples, g))
    inter = integrate(np.minimum(f.samples, g.samples), f)
    if smallest == 0:
        return EMPTY_VALUE if integrate(np.maximum(f.samples, g.samples), f) == 0 else 0.0
    return inter / smallest


def field_coincidence(f, g) -> float:
    """sqrt(Jaccard * interiority) for non-negative fields."""
    i = field_interiority(f, g)
    return math.sqrt(field_jaccard(f, g) * i)


def discretize(func, x0: float, x1: float, n: int) -> MFunction:
    """Sample ``func`` at ``n`` evenly spaced points of ``[x0, x1]``, endpoints included.

    No normalization is applied.
    """
    if not x1 > x0:
        raise ValueError(f"empty interval [{x0}, {x1}]")
    if n < 2:
        raise ValueError("need at least two samples")
    xs = np.linspace(x0, x1, n)
    try:
        ys = np.asarray(func(xs), dtype=float)
        if ys.shape != xs.shape:
            raise TypeError
    except (TypeError, ValueError):
        ys = np.array([float(func(x)) for x in xs])
    return MFunction(ys, (x1 - x0) / (n - 1), x0)


# -- lag-indexed comparison ------------------------------------------------

def _lag_steps(f: MFunction, lags) -> np.ndarray:
    lags = np.atleast_1d(np.asarray(lags, dtype=float))
    steps = np.rint(lags / f.dx)
    if not np.allclose(steps * f.dx, lags, rtol=1e-9, atol=1e-9 * f.dx):
        raise ValueError("lags must be integer multiples of dx")
    return steps.astype(int)


def _overlap(f: MFunction, g: MFunction, k: int):
    # g shifted right by k samples: g(x - y) at f-index i is g[i - k]
    lo, hi = max(0, k), min(f.samples.size, g.samples.size + k)
    if hi <= lo:
        return None, None
    return f.samples[lo:hi], g.samples[lo - k:hi - k]


def _lagged(f: MFunction, g: MFunction, lags, kernel, workers: int | None) -> MFunction:
    if not (math.isclose(f.dx, g.dx, rel_tol=1e-9) and math.isclose(f.x0, g.x0, rel_tol=1e-9, abs_tol=1e-12)):
        raise SimilarityError("functions must share the sampling grid origin and step")
    lag_arr = np.atleast_1d(np.asarray(lags, dtype=float))
    steps = _lag_steps(f, lag_arr)
    if lag_arr.size > 1:
        spacing = np.diff(lag_arr)
        if not np.allclose(spacing, spacing[0], rtol=1e-9):
            raise ValueError("lags must be evenly spaced")
        lag_dx = float(spacing[0])
    else:
        lag_dx = f.dx

    def one(k):
        a, b = _overlap(f, g, int(k))
        if a is None:
            return 0.0
        return kernel(a, b)

    if workers is not None and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            values = list(pool.map(one, steps))
    else:
        values = [one(k) for k in steps]
    return MFunction(np.array(values), lag_dx if lag_dx > 0 else f.dx, float(lag_arr[0]))


def mconvolution(f: MFunction, g: MFunction, lags, workers: int | None = None) -> MFunction:
    """Signed Jaccard index of ``f(x)`` and ``g(x - y)`` for every lag ``y``.

    Only the overlapping part of the two supports is integrated; a lag with no
    overlap, or with a vanishing union, yields 0. Lags must be evenly spaced
    multiples of ``dx``; the result is an :class:`MFunction` over the lags.
    """
    dx = f.dx

    def kernel(a, b):
        inter, union = _pointwise(a, b)
        if a.size < 2:
            return 0.0
        den = np.trapezoid(union, dx=dx)
        return float(np.trapezoid(inter, dx=dx) / den) if den > 0 else 0.0

    return _lagged(f, g, lags, kernel, workers)


def cross_correlation(f: MFunction, g: MFunction, lags, workers: int | None = None) -> MFunction:
    """Normalized cross-correlation ``∫f(x) g(x-y) dx / sqrt(∫f² ∫g²)``.

    Uses the same overlap handling as :func:`mconvolution` so the two can be
    compared lag by lag.
    """
    norm = math.sqrt(integrate(f.samples**2, f) * integrate(g.samples**2, g))
    dx = f.dx

    def kernel(a, b):
        if a.size < 2 or norm == 0:
            return 0.0
        return float(np.trapezoid(a * b, dx=dx) / norm)

    return _lagged(f, g, lags, kernel, workers)


def main_lobe_halfwidth(profile: MFunction) -> float:
    """Half-width at half maximum of the highest peak, in lag units.

    Walks outwards from the peak until the value first drops below half of it
    and returns the larger of the two distances.
    """
    v = profile.samples
    p = int(np.argmax(v))
    half = v[p] / 2
    right = next((i for i in range(p, v.size) if v[i] < half), v.size - 1) - p
    left = p - next((i for i in range(p, -1, -1) if v[i] < half), 0)
    return max(left, right) * profile.dx


# -- scatter export ----------------------------------------------------------

@dataclass
class ScatterPairs:
    """Paired multiplicities ``(mA, mB)``; ``region`` is U above the identity line, D below, I on it."""

    m_a: np.ndarray
    m_b: np.ndarray
    region: np.ndarray


def scatter_pairs(f, g) -> ScatterPairs:
    _check_common(f, g)
    a = f.samples.ravel()
    b = g.samples.ravel()
    region = np.where(b > a, "U", np.where(b < a, "D", "I"))
    return ScatterPairs(a.copy(), b.copy(), region)


# -- image experiment ------------------------------------------------------

def synthetic_image(size: int = 64) -> MField2D:
    """Deterministic flower-like gray image with values in [0, 1]."""
    t = np.linspace(-1.0, 1.0, size)
    x, y = np.meshgrid(t, t)
    rho = np.hypot(x, y)
    theta = np.arctan2(y, x)
    petals = (0.5 + 0.5 * np.cos(6 * theta)) * np.exp(-((rho / 0.75) ** 2))
    center = np.exp(-((rho / 0.15) ** 2))
    img = 0.15 + petals + 0.6 * center
    return MField2D(img / img.max())


def noisy_image_experiment(img: MField2D, amplitude: float, seed: int = 0) -> tuple[MField2D, float]:
    """Add seeded uniform noise in ``[-amplitude, amplitude]`` and compare.

    For a fixed seed the noise pattern is the same up to its amplitude, so
    the returned Jaccard index degrades monotonically as amplitude grows.
    """
    if amplitude < 0:
        raise ValueError("amplitude must be non-negative")
    base = SplitMix64(seed).uniform(-1.0, 1.0, img.samples.size).reshape(img.samples.shape)
    noisy = MField2D(img.samples + amplitude * base, img.dx, img.dy, img.x0, img.y0)
    return noisy, field_jaccard(img, noisy)


# -- clusters ----------------------------------------------------------------

@dataclass(frozen=True)
class Grid2D:
    """Evaluation grid: ``nx`` points over ``[x0, x1]`` and ``ny`` over ``[y0, y1]``."""

    x0: float
    x1: float
    nx: int
    y0: float
    y1: float
    ny: int

    def __post_init__(self):
        if self.nx < 2 or self.ny < 2 or not (self.x1 > self.x0 and self.y1 > self.y0):
            raise ValueError(f"degenerate grid {self}")

    @property
    def xs(self) -> np.ndarray:
        return np.linspace(self.x0, self.x1, self.nx)

    @property
    def ys(self) -> np.ndarray:
        return np.linspace(self.y0, self.y1, self.ny)

    @classmethod
    def covering(cls, *point_sets, margin: float, n: int = 200) -> "Grid2D":
        pts = np.vstack([np.asarray(p, dtype=float).reshape(-1, 2) for p in point_sets])
        lo, hi = pts.min(axis=0) - margin, pts.max(axis=0) + margin
        return cls(lo[0], hi[0], n, lo[1], hi[1], n)


def cluster_separation(points_a, points_b, grid: Grid2D | None = None, bandwidth: float | None = None) -> float:
    """Jaccard index between the kernel density estimates of two 2-D point clusters.

    Near 0 for well separated clusters, 1 for identical ones. The bandwidth
    defaults to the larger of the two clusters' Silverman bandwidths, and the
    grid to one covering both clusters with a margin of five bandwidths.
    """
    from .joint_stats import kde_2d, silverman_bandwidth

    pa = np.asarray(points_a, dtype=float).reshape(-1, 2)
    pb = np.asarray(points_b, dtype=float).reshape(-1, 2)
    if len(pa) == 0 or len(pb) == 0:
        raise ValueError("both clusters need at least one point")
    if bandwidth is None:
        bandwidth = max(silverman_bandwidth(pa), silverman_bandwidth(pb))
    if not bandwidth > 0:
        raise ValueError("bandwidth must be positive")
    if grid is None:
        grid = Grid2D.covering(pa, pb, margin=5 * bandwidth)
    return field_jaccard(kde_2d(pa, grid, bandwidth), kde_2d(pb, grid, bandwidth))
