"""Sliding-squares benchmark.

A square A of side ``a`` and a smaller square B of side ``b = r*a`` share a
horizontal axis; ``x`` is the offset of B's center from A's center. B is
fully inside A for ``x <= (a - b)/2`` and fully outside for ``x >= (a + b)/2``.
Between those limits the overlap is a ``b``-tall strip whose width shrinks
linearly with ``x``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

INDEX_KINDS = ("jaccard", "interiority", "coincidence", "additive_jaccard", "additive_coincidence")


@dataclass(frozen=True)
class SlidingSquares:
    a: float
    r: float
    x: float

    def __post_init__(self):
        if not self.a > 0:
            raise ValueError(f"side a must be positive, got {self.a}")
        if not 0 < self.r <= 1:
            raise ValueError(f"size ratio r must lie in (0, 1], got {self.r}")

    @property
    def b(self) -> float:
        return self.r * self.a


@dataclass
class IndexField:
    x_axis: np.ndarray
    r_axis: np.ndarray
    values: np.ndarray  # shape (len(r_axis), len(x_axis))
    kind: str


def _areas(a, r, x):
    b = r * a
    width = np.where(x <= (a - b) / 2, b, np.clip((a + b) / 2 - x, 0.0, b))
    inter = b * width
    union = a * a * (1 + r * r) - inter
    return inter, union, width / b


def overlap_areas(cfg: SlidingSquares) -> tuple[float, float]:
    """Return ``(|A ∩ B|, |A ∪ B|)``.

    Inside the partial-overlap range the intersection is
    ``(a**2 * r * (1 + r) - 2*r*a*x) / 2``; outside it is clamped to ``b**2``
    (containment) or 0 (separation).
    """
    inter, union, _ = _areas(cfg.a, cfg.r, cfg.x)
    return float(inter), float(union)


def _index(kind, a, r, x):
    inter, union, interior = _areas(a, r, x)
    b2 = (r * a) ** 2
    if kind == "jaccard":
        return inter / union
    if kind == "interiority":
        return interior
    if kind == "coincidence":
        return np.sqrt(inter / union * interior)
    if kind == "additive_jaccard":
        return 2 * inter / (a * a + b2)
    if kind == "additive_coincidence":
        return np.sqrt(2 * inter / (a * a + b2) * interior)
    raise ValueError(f"unknown index kind {kind!r}; expected one of {INDEX_KINDS}")


def index_at(cfg: SlidingSquares, which: str) -> float:
    return float(_index(which, cfg.a, cfg.r, cfg.x))


def field(a: float, x_samples: int, r_samples: int, which: str, r_min: float | None = None) -> IndexField:
    """Evaluate an index on a regular ``(x, r)`` grid.

    ``x`` spans ``[0, a]``, which covers every configuration from full
    containment to full separation. ``r`` spans ``[r_min, 1]``; ``r = 0`` is
    excluded because B would be empty. ``r_min`` defaults to ``1/r_samples``.
    """
    if x_samples < 2 or r_samples < 2:
        raise ValueError("need at least two samples per axis")
    if which not in INDEX_KINDS:
        raise ValueError(f"unknown index kind {which!r}; expected one of {INDEX_KINDS}")
    if r_min is None:
        r_min = 1.0 / r_samples
    xs = np.linspace(0.0, a, x_samples)
    rs = np.linspace(r_min, 1.0, r_samples)
    R, X = np.meshgrid(rs, xs, indexing="ij")
    return IndexField(xs, rs, _index(which, a, R, X), which)


def slices(a: float, b_values, x_samples: int, which: str):
    """Index profiles versus ``x`` in ``[0, a]`` for each square size ``b``.

    Returns ``(xs, [(b, values), ...])``.
    """
    if x_samples < 2:
        raise ValueError("need at least two x samples")
    xs = np.linspace(0.0, a, x_samples)
    out = []
    for b in b_values:
        if not 0 < b <= a:
            raise ValueError(f"slice size b={b} must satisfy 0 < b <= a={a}")
        out.append((float(b), _index(which, a, b / a, xs)))
    return xs, out


def rasterized_areas(cfg: SlidingSquares, resolution: int = 2000) -> tuple[float, float]:
    """Pixel-count estimate of ``(|A ∩ B|, |A ∪ B|)``.

    The bounding box of both squares is split into ``resolution`` pixels per
    side and each pixel center is tested for membership.
    """
    a, b, x = cfg.a, cfg.b, cfg.x
    x0, x1 = min(-a / 2, x - b / 2), max(a / 2, x + b / 2)
    y0, y1 = -a / 2, a / 2
    px = (x1 - x0) / resolution
    py = (y1 - y0) / resolution
    cx = x0 + (np.arange(resolution) + 0.5) * px
    cy = y0 + (np.arange(resolution) + 0.5) * py
    in_a = (np.abs(cx)[None, :] <= a / 2) & (np.abs(cy)[:, None] <= a / 2)
    in_b = (np.abs(cx - x)[None, :] <= b / 2) & (np.abs(cy)[:, None] <= b / 2)
    pixel = px * py
    return float((in_a & in_b).sum() * pixel), float((in_a | in_b).sum() * pixel)


def overlap_fraction(a: float, b: float, x):
    """Fraction of B's width lying inside A."""
    return np.clip(((a + b) / 2 - np.asarray(x, dtype=float)) / b, 0.0, 1.0)

