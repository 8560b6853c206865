# %% [markdown]
# # Jaccard, interiority and coincidence on discrete sets
#
# Two pairs of sets can share the same Jaccard index while relating very
# differently: in one the sets partially overlap, in the other the smaller
# set sits entirely inside the larger. Interiority tells them apart, and the
# coincidence index folds both views into one number.

# %%
from coindex import coincidence, interiority, jaccard

overlap = (set("abcde"), set("cdefg"))
nested = (set("abcdefg"), set("abc"))

for name, (a, b) in [("overlap", overlap), ("nested", nested)]:
    print(f"{name:8s} J={jaccard(a, b):.4f}  I={interiority(a, b):.4f}  C={coincidence(a, b):.4f}")

# %% [markdown]
# ## Multisets, weights and the additive variant

# %%
from coindex import additive_multiset_jaccard, multiset_jaccard, weighted_jaccard

a = {"a": 3, "b": 2}
b = {"a": 2, "b": 1, "c": 2, "d": 1}
print("multiset Jaccard:", multiset_jaccard(a, b))  # 3/8

print("weighted Jaccard:", weighted_jaccard({"a": 2, "b": 5, "c": 1}, {"b": 5, "e": 1, "f": 1}))  # 1/2

A = {"a": 3, "b": 1, "c": 3}
B = {"a": 2, "c": 1}
print("additive Jaccard:", additive_multiset_jaccard(A, A), additive_multiset_jaccard(A, B))  # 1, 3/5
