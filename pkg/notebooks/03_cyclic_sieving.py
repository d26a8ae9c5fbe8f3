# %% [markdown]
# # Cyclic sieving on noncrossing chains
#
# Count s-chains w_1 <= ... <= w_s <= c in absolute order that are fixed by
# an element of order d in Z/sh, split by the parabolic class of the fixed
# space of w_1, and compare with the Kreweras polynomial at a primitive d-th
# root of unity.

# %%
import numpy as np

from coxkrew import kreweras as K
from coxkrew.coxeter import build_group, count_fixed_chains, enumerate_nc_chains, fixed_space_class, h3_labelled
from coxkrew.types import CoxeterType, parabolic_classes

# %%
H3 = CoxeterType.H3()
G = build_group(H3)
print("order", G.order, "reflections", len(G.reflections), "Coxeter number", G.h)
print("absolute length histogram", np.bincount(G.abs_len))

# %% [markdown]
# The 15 rotations o_i in the interval [1, c], grouped by fixed-space class.

# %%
r, o = h3_labelled(G)
print([str(fixed_space_class(G, x)) for x in o])

# %%
s = 2
chains = enumerate_nc_chains(G, s)
sh = s * G.h
print(len(chains), "chains")
for d in [d for d in range(1, sh + 1) if sh % d == 0]:
    row = []
    for P in parabolic_classes(H3):
        census = count_fixed_chains(G, s, d, P, chains)
        assert census == K.specialize(H3, K.phi(H3, P), sh + 1, d)
        row.append(f"{P}:{census}")
    print(f"d={d:2}", " ".join(row))

# %% [markdown]
# The dihedral family: the trivial class at d = 1 gives s(ms - m + 2)/2.

# %%
for m in range(3, 9):
    T = CoxeterType.I2(m)
    Gm = build_group(T)
    print(m, [count_fixed_chains(Gm, s, 1, "triv") for s in range(1, 4)],
          [s * (m * s - m + 2) // 2 for s in range(1, 4)])
