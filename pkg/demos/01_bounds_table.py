# %% [markdown]
# # Upper bounds side by side
#
# Every bound in `lintersect.bounds` is an exact integer together with the
# hypothesis it needs. Here we print the table for a few parameter sets and
# see which bound wins.

# %%
from lintersect import best_bound

def show(n, k, L):
    table = best_bound(n, k, L)
    print(f"n={n} k={k} L={L}")
    for r in table.reports:
        print(f"  {r.name:15} {r.value:>12}  applicable={r.applicable}")
    for name, err in table.errors:
        print(f"  {name:15} skipped: {err}")
    m = table.minimum
    print(f"  -> smallest applicable: {m.name} = {m.value}\n")

# %% [markdown]
# At n = 7 the threshold for the positive-L bound C(n-l1, s) is far away,
# so only the classical Ray-Chaudhuri-Wilson, Frankl-Furedi and Bose bounds
# apply. All three give 7.

# %%
show(7, 3, [1])

# %% [markdown]
# Past the threshold C(k^2, l1+1)s + l1 = 37 the positive-L bound is
# applicable and beats the classical one by one.

# %%
show(40, 3, [1])

# %% [markdown]
# Barg-Musin and Deza-Erdos-Frankl are rational and get floored. EDF always
# shows `unknown` because its threshold n0(k, L) is not quantified.

# %%
show(20, 5, [1, 2, 3])
show(100, 4, [1, 2, 3])
