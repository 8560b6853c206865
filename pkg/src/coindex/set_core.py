"""Pairwise similarity indices for sets, multisets, weighted sets and matrices.

Sets are any iterable of hashable element ids. Multisets are mappings from
element id to a non-negative real multiplicity; zero entries are treated as
absent. Every ratio index returns ``EMPTY_VALUE`` when both operands are empty.
"""

from __future__ import annotations

import math
from collections.abc import Hashable, Iterable, Mapping

import numpy as np

# Two empty collections are considered identical.
EMPTY_VALUE = 1.0

Multiset = Mapping[Hashable, float]


class SimilarityError(ValueError):
    """Raised when the operands of an index are inconsistent."""


def _as_set(a) -> frozenset:
    if isinstance(a, Mapping):
        return frozenset(k for k, v in a.items() if v > 0)
    return frozenset(a)


def as_multiset(a) -> dict:
    """Return a plain ``{element: multiplicity}`` dict.

    Sets (any non-mapping iterable) are promoted to multiplicity 1. Negative
    multiplicities are rejected; zeros are dropped.
    """
    if not isinstance(a, Mapping):
        return {k: 1.0 for k in a}
    out = {}
    for k, v in a.items():
        v = float(v)
        if not math.isfinite(v) or v < 0:
            raise SimilarityError(f"multiplicity of {k!r} must be a finite non-negative real, got {v}")
        if v > 0:
            out[k] = v
    return out


def _min_max_sums(a: dict, b: dict, weights=None) -> tuple[float, float]:
    num = den = 0.0
    for k in a.keys() | b.keys():
        x, y = a.get(k, 0.0), b.get(k, 0.0)
        w = 1.0 if weights is None else weights[k]
        num += w * min(x, y)
        den += w * max(x, y)
    return num, den


def _ratio(num: float, den: float) -> float:
    if den == 0:
        return EMPTY_VALUE
    return num / den


def jaccard(a: Iterable, b: Iterable) -> float:
    """|A ∩ B| / |A ∪ B| for two plain sets."""
    a, b = _as_set(a), _as_set(b)
    return _ratio(len(a & b), len(a | b))


def jaccard_distance(a: Iterable, b: Iterable) -> float:
    return 1.0 - jaccard(a, b)


def jaccard_power(a: Iterable, b: Iterable, p: float) -> float:
    """|A ∩ B|**p / |A ∪ B|.

    For ``p > 1`` the value is no longer bounded by 1 but by ``|A ∩ B|**(p-1)``.
    """
    if not math.isfinite(p):
        raise SimilarityError("exponent p must be finite")
    a, b = _as_set(a), _as_set(b)
    inter, union = len(a & b), len(a | b)
    if union == 0:
        return EMPTY_VALUE
    if inter == 0 and p <= 0:
        raise SimilarityError("0**p is undefined for p <= 0")
    return inter**p / union


def multiset_jaccard(a, b) -> float:
    """Sum of element-wise minima over sum of element-wise maxima."""
    return _ratio(*_min_max_sums(as_multiset(a), as_multiset(b)))


def matrix_jaccard(a, b) -> float:
    """Multiset Jaccard over the entries of two equally shaped non-negative arrays."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape:
        raise SimilarityError(f"shape mismatch: {a.shape} vs {b.shape}")
    if (a < 0).any() or (b < 0).any():
        raise SimilarityError("matrix entries must be non-negative")
    return _ratio(float(np.minimum(a, b).sum()), float(np.maximum(a, b).sum()))


def interiority(a, b) -> float:
    """Overlap relative to the smaller operand.

    Plain sets give ``|A ∩ B| / min(|A|, |B|)``; mappings are treated as
    multisets, giving ``sum(min) / min(sum(a), sum(b))``. The value is 1 exactly
    when one operand is contained in the other. If only one operand is empty
    the overlap is 0.
    """
    if isinstance(a, Mapping) or isinstance(b, Mapping):
        ma, mb = as_multiset(a), as_multiset(b)
        inter, _ = _min_max_sums(ma, mb)
        sa, sb = sum(ma.values()), sum(mb.values())
    else:
        sa_, sb_ = _as_set(a), _as_set(b)
        inter, sa, sb = len(sa_ & sb_), len(sa_), len(sb_)
    if sa == 0 and sb == 0:
        return EMPTY_VALUE
    smallest = min(sa, sb)
    if smallest == 0:
        return 0.0
    return inter / smallest


def coincidence(a, b, sqrt: bool = True) -> float:
    """Coincidence index: sqrt(Jaccard * interiority).

    Mappings are compared with the multiset Jaccard. With ``sqrt=False`` the
    bare product is returned, which penalizes partial similarity more.
    """
    if isinstance(a, Mapping) or isinstance(b, Mapping):
        j = multiset_jaccard(a, b)
    else:
        j = jaccard(a, b)
    c = j * interiority(a, b)
    return math.sqrt(c) if sqrt else c


def weighted_jaccard(a: Mapping, b: Mapping) -> float:
    """Total weight of A ∩ B over total weight of A ∪ B.

    Each element carries a single weight; a shared element listed with two
    different weights raises :class:`SimilarityError`.
    """
    for name, ws in (("a", a), ("b", b)):
        for k, w in ws.items():
            if not w > 0:
                raise SimilarityError(f"weight of {k!r} in {name} must be positive, got {w}")
    for k in a.keys() & b.keys():
        if a[k] != b[k]:
            raise SimilarityError(f"conflicting weights for {k!r}: {a[k]} vs {b[k]}")
    union = {**a, **b}
    inter = sum(a[k] for k in a.keys() & b.keys())
    return _ratio(inter, sum(union.values()))


def weighted_multiset_jaccard(a, b, weights: Mapping) -> float:
    ma, mb = as_multiset(a), as_multiset(b)
    missing = (ma.keys() | mb.keys()) - weights.keys()
    if missing:
        raise SimilarityError(f"missing weights for {sorted(map(str, missing))}")
    for k in ma.keys() | mb.keys():
        if not weights[k] > 0:
            raise SimilarityError(f"weight of {k!r} must be positive")
    return _ratio(*_min_max_sums(ma, mb, weights))


def additive_multiset_jaccard(a, b) -> float:
    """2 * sum(min) / sum(a + b), using the multiset sum in place of the union."""
    ma, mb = as_multiset(a), as_multiset(b)
    inter, _ = _min_max_sums(ma, mb)
    return _ratio(2.0 * inter, sum(ma.values()) + sum(mb.values()))


def additive_coincidence(a, b) -> float:
    ma, mb = as_multiset(a), as_multiset(b)
    return math.sqrt(additive_multiset_jaccard(ma, mb) * interiority(ma, mb))
