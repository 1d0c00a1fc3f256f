# %% [markdown]
# # The three lemmas on concrete families
#
# In order: union size, trace against an empty-kernel subfamily (the soul
# lemma), and the Helly witness. Then the decomposition they feed into.

# %%
from lintersect import decompose, helly_witness, projective_plane, star, trace_bound_check, union_size_check

fano = projective_plane(2).lines

# %% [markdown]
# Union lemma: t pairwise intersecting k-sets cover at most k + (t-1)(k-1)
# points. The Fano lines cover 7 points, well under the bound of 15.

# %%
print(union_size_check(fano, 3))

# %% [markdown]
# Helly: a k-uniform family with empty kernel already has at most k+1
# members with empty intersection. A star has no such witness.

# %%
W = helly_witness(fano.canonical(), 3)
print("witness:", W.to_lists())
print("star:", helly_witness(star(9, 3, 1), 3))

# %% [markdown]
# Trace lemma: any further line must meet the union of the witness in at
# least l1 + 1 = 2 points.

# %%
for line in fano:
    if line not in W:
        print(line, trace_bound_check(W, line, 1))

# %% [markdown]
# So every line is covered by some 2-subset T of M = union(W), and the
# family splits into the parts F(T).

# %%
for T, part in decompose(fano, W.union(), 1).items():
    print(T, part.to_lists())
