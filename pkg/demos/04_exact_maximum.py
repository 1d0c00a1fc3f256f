# %% [markdown]
# # Exact maxima by clique search
#
# L-intersecting k-uniform families are the cliques of the compatibility
# graph on all k-subsets. `max_family` finds a maximum one with a bitset
# branch and bound.

# %%
import time

from lintersect import bound_main, compat_graph, enumerate_maximum, max_family

g = compat_graph(7, 3, [1])
print(len(g), "vertices,", g.edge_count, "edges")

# %%
for n, k, L in [(7, 3, [1]), (8, 2, [1]), (6, 3, [2]), (8, 4, [2, 3])]:
    t0 = time.perf_counter()
    cert = max_family(n, k, L)
    main = bound_main(n, k, L)
    print(f"({n},{k},{L}) optimum {cert.optimum:3}  main bound {main.value} ({main.applicable})"
          f"  nodes {cert.nodes_explored}  {time.perf_counter() - t0:.3f}s")

# %% [markdown]
# Enumeration lists every optimum. On 7 points with k = 3 and L = {1} these
# are the 30 labellings of the Fano plane, so none has a common point.

# %%
en = enumerate_maximum(7, 3, [1])
print(len(en.families), en.complete)
print(en.families[0].to_lists())

# %% [markdown]
# With workers > 1 the root branches are split over a process pool. The
# optimum is the same; only the witness may differ.

# %%
print(max_family(8, 3, [1, 2], workers=2).optimum, max_family(8, 3, [1, 2]).optimum)
