# %% [markdown]
# # q-Kreweras tables
#
# Closed formulas for the four coincidental families, evaluated exactly in
# Z[q, 1/q].  Run cell by cell in an editor that understands `# %%`, or as a
# plain script.

# %%
from coxkrew import kreweras as K
from coxkrew.partitions import enumerate_partitions
from coxkrew.types import CoxeterType, Phi, irreducible_labels

# %% [markdown]
# Type A on four letters at t = h + 1 = 5.  At q = 1 each value counts the
# noncrossing partitions of {1,2,3,4} with the given block sizes.

# %%
A = CoxeterType.A(4)
for lam in enumerate_partitions(4):
    p = K.kreweras_poly(A, lam, 5)
    print(f"{str(lam):12} {str(p):40} q=1: {p.eval_at_one()}")

# %% [markdown]
# Type BC(2) at t = 5.  The bipartition ((1),(1)) is not in the image of the
# parabolic map and its value has a negative coefficient.

# %%
BC2 = CoxeterType.BC(2)
for b in irreducible_labels(BC2):
    p = K.kreweras_poly(BC2, b, 5)
    print(f"{str(b):12} {str(p):24} in image: {K.in_image_phi(BC2, b)}")

# %% [markdown]
# H3 symbolic rows, then the same rows evaluated at t = 11.

# %%
H3 = CoxeterType.H3()
for chi, row in K.H3_TABLE.items():
    print(f"{str(chi):12} {row.formula.render():34} {K.kreweras_poly(H3, chi, 11)}")

# %% [markdown]
# Refinement: the level-k strata sum to the Narayana numbers, which sum to
# the Catalan number.

# %%
for k in range(4):
    print(k, K.narayana(H3, k, 11).normalize())
print("Catalan(H3, 11) at q=1:", K.catalan(H3, 11).normalize().eval_at_one())
print("refinement holds:", K.refinement_check(H3, 11))

# %% [markdown]
# A t that is not very good: t = 4 for A on four letters.  Some values stop
# being polynomials.

# %%
for lam in enumerate_partitions(4):
    v = K.kreweras(A, lam, 4)
    print(f"{str(lam):12} {v.try_normalize()}")
