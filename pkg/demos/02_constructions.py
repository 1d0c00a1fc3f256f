# %% [markdown]
# # Stars, sunflowers and projective planes
#
# The three constructions and the quick summary the CLI prints for each.

# %%
from lintersect import binomial, intersection_sizes, kernel, projective_plane, star, sunflower
from lintersect.cli import summarize

# %% [markdown]
# A star fixes the set {1..t} and takes every k-set through it, giving
# C(n-t, k-t) blocks.

# %%
S = star(10, 4, 2)
print(len(S), binomial(8, 2), summarize(S))

# %% [markdown]
# A sunflower keeps a core of size lambda and hangs disjoint petals on it.
# The capacity error says how many petals fit.

# %%
print(sunflower(7, 3, 1, 3).to_lists())
try:
    sunflower(5, 3, 1, 3)
except ValueError as exc:
    print("error:", exc)

# %% [markdown]
# PG(2, q) over GF(q). For q = 4 and 8 this needs extension-field
# arithmetic. Each line family is (q+1)-uniform and {1}-intersecting with an
# empty kernel.

# %%
for q in (2, 3, 4, 5, 7, 8, 9):
    P = projective_plane(q)
    print(q, P.n, len(P.lines), intersection_sizes(P.lines), kernel(P.lines), all(P.check().values()))

# %% [markdown]
# The Fano plane shows why the conjecture needs n > k^2 - k + 1. With k = 3
# and n = 7 it has 7 lines, one more than C(n-1, 1) = 6.

# %%
F = projective_plane(2).lines
print(len(F), ">", binomial(6, 1))
