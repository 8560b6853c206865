"""Joint variation of paired observations.

Both variables are standardized with population (1/N) moments. Pearson's
coefficient is then the mean product; the Jaccard correlation applies the
signed min/max rule of :mod:`coindex.mfields` to each observation pair.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .mfields import Grid2D, MField2D, MFunction
from .prng import SplitMix64, derive_seed
from .set_core import EMPTY_VALUE


def standardize(values) -> np.ndarray:
    """Return ``(X - mean) / std`` with the population standard deviation."""
    v = np.asarray(values, dtype=float)
    if v.ndim != 1 or v.size < 2:
        raise ValueError("need a 1-D sample with at least two observations")
    if not np.isfinite(v).all():
        raise ValueError("observations must be finite")
    mu = v.mean()
    sigma = math.sqrt(np.mean((v - mu) ** 2))
    if sigma == 0 or sigma < 1e-300:
        raise ValueError("cannot standardize a sample with zero variance")
    return (v - mu) / sigma


def _paired(xs, ys):
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    if xs.shape != ys.shape:
        raise ValueError(f"paired samples differ in length: {xs.shape} vs {ys.shape}")
    return standardize(xs), standardize(ys)


def pearson(xs, ys) -> float:
    x, y = _paired(xs, ys)
    return float(np.clip(np.mean(x * y), -1.0, 1.0))


def jaccard_correlation(xs, ys) -> float:
    """Signed Jaccard index of two standardized samples, in [-1, 1].

    ``sum(sign(x*y) * min(|x|, |y|)) / sum(max(|x|, |y|))``.
    """
    x, y = _paired(xs, ys)
    ax, ay = np.abs(x), np.abs(y)
    den = np.maximum(ax, ay).sum()
    if den == 0:
        return EMPTY_VALUE
    return float((np.sign(x * y) * np.minimum(ax, ay)).sum() / den)


def correlated_normals(rho: float, n: int, seed: int) -> tuple[np.ndarray, np.ndarray]:
    """``n`` standard bivariate normal pairs with correlation ``rho``.

    Draws ``2n`` normals from the seeded stream and applies the Cholesky
    factor ``[[1, 0], [rho, sqrt(1 - rho**2)]]``.
    """
    if not -1 < rho < 1:
        raise ValueError(f"rho must lie in (-1, 1), got {rho}")
    z = SplitMix64(seed).normal(2 * n)
    z1, z2 = z[:n], z[n:]
    return z1, rho * z1 + math.sqrt(1 - rho * rho) * z2


@dataclass
class SweepRow:
    rho: float
    pearson: float
    jaccard: float


def gaussian_sweep(rhos, n: int, seed: int, workers: int | None = None) -> list[SweepRow]:
    """Compare Pearson and Jaccard correlation over increasingly correlated samples.

    Each ``rho`` gets its own stream derived from ``seed`` and its position, so
    results do not depend on evaluation order.
    """
    rhos = [float(r) for r in rhos]
    if n < 2:
        raise ValueError("n must be at least 2")
    for r in rhos:
        if not -1 < r < 1:
            raise ValueError(f"rho must lie in (-1, 1), got {r}")

    def row(item):
        i, rho = item
        xs, ys = correlated_normals(rho, n, derive_seed(seed, i))
        return SweepRow(rho, pearson(xs, ys), jaccard_correlation(xs, ys))

    items = list(enumerate(rhos))
    if workers is not None and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(row, items))
    return [row(it) for it in items]


# -- kernel density estimates -------------------------------------------------

def silverman_bandwidth(points) -> float:
    """Silverman's rule of thumb, averaged over dimensions for isotropic kernels."""
    pts = np.asarray(points, dtype=float)
    if pts.ndim == 1:
        pts = pts[:, None]
    n, d = pts.shape
    if n < 2:
        return 1.0
    sd = pts.std(axis=0, ddof=1)
    iqr = np.subtract(*np.percentile(pts, [75, 25], axis=0)) / 1.34
    spread = np.where(iqr > 0, np.minimum(sd, iqr), sd)
    scale = float(np.mean(spread)) or 1.0
    if d == 1:
        return 0.9 * scale * n ** (-1 / 5)
    return (4 / (d + 2)) ** (1 / (d + 4)) * scale * n ** (-1 / (d + 4))


def _gauss(grid_axis: np.ndarray, centers: np.ndarray, h: float) -> np.ndarray:
    return np.exp(-0.5 * ((grid_axis[None, :] - centers[:, None]) / h) ** 2)


def kde_1d(points, x0: float, x1: float, n: int, bandwidth: float | None = None) -> MFunction:
    """Gaussian kernel density estimate sampled at ``n`` points of ``[x0, x1]``."""
    pts = np.asarray(points, dtype=float).ravel()
    if pts.size == 0:
        raise ValueError("need at least one point")
    h = silverman_bandwidth(pts) if bandwidth is None else bandwidth
    if not h > 0:
        raise ValueError("bandwidth must be positive")
    xs = np.linspace(x0, x1, n)
    dens = _gauss(xs, pts, h).sum(axis=0) / (pts.size * h * math.sqrt(2 * math.pi))
    return MFunction(dens, (x1 - x0) / (n - 1), x0)


def kde_2d(points, grid: Grid2D, bandwidth: float | None = None) -> MField2D:
    """Isotropic Gaussian kernel density estimate of 2-D points on ``grid``."""
    pts = np.asarray(points, dtype=float).reshape(-1, 2)
    if len(pts) == 0:
        raise ValueError("need at least one point")
    h = silverman_bandwidth(pts) if bandwidth is None else bandwidth
    if not h > 0:
        raise ValueError("bandwidth must be positive")
    kx = _gauss(grid.xs, pts[:, 0], h)
    ky = _gauss(grid.ys, pts[:, 1], h)
    dens = ky.T @ kx / (len(pts) * 2 * math.pi * h * h)
    return MField2D(
        dens,
        dx=(grid.x1 - grid.x0) / (grid.nx - 1),
        dy=(grid.y1 - grid.y0) / (grid.ny - 1),
        x0=grid.x0,
        y0=grid.y0,
    )
