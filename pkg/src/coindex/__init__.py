"""Jaccard, interiority and coincidence indices for sets, multisets, functions and fields."""

from .set_core import (
    EMPTY_VALUE,
    SimilarityError,
    additive_coincidence,
    additive_multiset_jaccard,
    coincidence,
    interiority,
    jaccard,
    jaccard_distance,
    jaccard_power,
    matrix_jaccard,
    multiset_jaccard,
    weighted_jaccard,
    weighted_multiset_jaccard,
)
from .multiway import (
    chaining,
    coincidence_3,
    coincidence_n,
    composite_jaccard,
    interiority_3,
    interiority_3_layers,
    interiority_n,
    jaccard_n,
)
from .mfields import (
    MField2D,
    MFunction,
    abs_union,
    field_coincidence,
    field_jaccard,
    mconvolution,
    signed_intersection,
)
from .joint_stats import jaccard_correlation, pearson, standardize

__version__ = "0.1.0"
