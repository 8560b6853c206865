# %% [markdown]
# # Images and point clusters as scalar fields
#
# A gray image is a 2-D field of multiplicities, so an image and a noisy
# copy can be compared directly. Clusters of points become fields once
# their kernel density estimates are sampled on a grid.

# %%
import numpy as np

from coindex.mfields import cluster_separation, noisy_image_experiment, synthetic_image

img = synthetic_image()
for amp in (0.0, 0.1, 0.25, 0.5):
    _, j = noisy_image_experiment(img, amp, seed=0)
    print(f"noise amplitude {amp:4.2f}: J = {j:.4f}")

# %%
rng = np.random.default_rng(1)
a = rng.normal(size=(500, 2))
for d in (0, 1, 2, 4, 8):
    b = rng.normal(size=(500, 2)) + [d, 0]
    print(f"distance {d}: overlap index {cluster_separation(a, b):.4f}")
