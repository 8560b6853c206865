# %% [markdown]
# # Functions as multisets with signed multiplicities
#
# Sampled functions are compared point by point: agreeing signs add the
# smaller magnitude to the intersection, opposite signs subtract it, and the
# union always accumulates the larger magnitude.

# %%
import numpy as np

from coindex.mfields import discretize, field_coincidence, field_jaccard, scatter_pairs

n = 2**14
cos = discretize(np.cos, 0, 2 * np.pi, n)
sin = discretize(np.sin, 0, 2 * np.pi, n)
print("J(cos, sin)  =", round(field_jaccard(cos, sin), 9))
print("J(cos, cos)  =", field_jaccard(cos, cos))
print("J(cos, -cos) =", field_jaccard(cos, -cos))

# %% [markdown]
# Non-negative densities reduce to the familiar ratio of integrals of the
# pointwise minimum and maximum.

# %%
def gauss(mu, s):
    return lambda x: np.exp(-0.5 * ((x - mu) / s) ** 2) / (s * np.sqrt(2 * np.pi))

p = discretize(gauss(0, 1), -8, 8, 4096)
q = discretize(gauss(1.5, 1.2), -8, 8, 4096)
print("J(p, q) =", field_jaccard(p, q), " C(p, q) =", field_coincidence(p, q))

pairs = scatter_pairs(p, q)
print("points above / below the identity line:", (pairs.region == "U").sum(), (pairs.region == "D").sum())
