# %% [markdown]
# # Type BC: the set Omega, the bijection iota and orbit counts

# %%
from coxkrew import kreweras as K
from coxkrew.partitions import enumerate_bipartitions, pair_stats
from coxkrew.qlaurent import ZERO
from coxkrew.springer_bc import (collapse_C, critical_values, enumerate_omega, iota, iota_inverse,
                                 kreweras_via_orbit, level_stratum_closed_form, orbit_count_exotic, phi_C)
from coxkrew.types import CoxeterType

# %% [markdown]
# Every pair (lambda, kappa) with |lambda| = 6 and its image under iota.

# %%
for w in enumerate_omega(3):
    b = iota(w)
    assert iota_inverse(b) == w
    print(f"{str(w):28} -> {str(b):14} critical {sorted(critical_values(w))}")

# %% [markdown]
# Orbit counts over F_q.  Summed over one level they give a closed product.

# %%
n = 3
for k in range(n + 1):
    stratum = [b for b in enumerate_bipartitions(n) if pair_stats(b).l == k]
    total = sum((orbit_count_exotic(b) for b in stratum), ZERO)
    print(k, total == level_stratum_closed_form(n, k), level_stratum_closed_form(n, k))

# %% [markdown]
# The orbit counts give a second route to the Kreweras numbers, valid for
# even t as well.

# %%
T = CoxeterType.BC(3)
for b in enumerate_bipartitions(3):
    same = kreweras_via_orbit(b, 7) == K.kreweras(T, b, 7)
    print(f"{str(b):16} phi_C {str(phi_C(b)):10} collapse {str(collapse_C(b)):14} agree at t=7: {same}")
print("t = 4:", kreweras_via_orbit(enumerate_bipartitions(3)[0], 4).try_normalize())
