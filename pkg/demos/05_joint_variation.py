# %% [markdown]
# # Joint variation: Pearson versus Jaccard correlation
#
# After standardizing both variables, each observation pair contributes its
# signed minimum magnitude to an intersection and its maximum magnitude to a
# union. The resulting index grows more gradually with correlation than
# Pearson's coefficient.

# %%
from coindex.joint_stats import gaussian_sweep

for row in gaussian_sweep([0, 0.25, 0.5, 0.75, 0.9, 0.95, 0.99], n=5000, seed=7):
    print(f"rho={row.rho:4.2f}  pearson={row.pearson:+.3f}  jaccard={row.jaccard:+.3f}")
