# %% [markdown]
# # More than two sets
#
# Three-set Jaccard, layered interiority, and the chaining index, which
# rewards a middle set B that links A and C while A and C stay apart.

# %%
from coindex.multiway import chaining, coincidence_3, composite_jaccard, interiority_3, jaccard_n

A, B, C = set("abcdefg"), set("efghijk"), set("ijklmno")
print("chaining(A, B, C) =", chaining(A, B, C))  # 6/7
print("chaining(A, C, B) =", chaining(A, C, B))

nested = ({1, 2, 3, 4}, {1, 2, 3}, {1, 2})
print("J3, I3, C3 =", jaccard_n(nested), interiority_3(*nested), coincidence_3(*nested))

# %% [markdown]
# Sets built from others by set operations compare like any other pair.

# %%
env = {"C": {1, 2, 3, 4}, "D": {2, 3, 5}, "E": {7, 8}, "F": {3, 8}, "G": {1, 9}}
print(composite_jaccard("((C & D) | E) - F", "C | G", env))
