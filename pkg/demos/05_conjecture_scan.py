# %% [markdown]
# # Small-case scan of the conjecture
#
# For n > k^2 - k + 1 the conjecture claims m <= C(n - l1, s), and that a
# family attaining it has a common l1-set. The scan solves each n exactly,
# enumerates the optima and records what it finds.

# %%
from collections import Counter

from lintersect import scan_conjecture

def show(report):
    for r in report.rows:
        print(f"n={r.n:2}  optimum {r.optimum:3}  C(n-l1,s)={r.conjectured_bound:3}"
              f"  holds={r.bound_holds}  optima={r.optima_count}"
              f"  kernels={dict(Counter(r.extremal_kernel_sizes))}  kernel claim={r.conjecture_kernel_holds}")

# %% [markdown]
# Pairs with L = {1}. At n = 4 the triangles tie with the stars, so the
# kernel claim fails there. From n = 5 on, only stars are maximum.

# %%
show(scan_conjecture(2, [1], 4, 8))

# %% [markdown]
# Triples with L = {1}. The optimum stays 7 (copies of the Fano plane). At
# n = 8 this equals C(7, 1), so the size bound holds with equality, but the
# optima have empty kernels. For n >= 9 the bound is strict and the kernel
# clause says nothing.

# %%
show(scan_conjecture(3, [1], 8, 12))
