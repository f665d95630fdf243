"""Coefficients, invariants and the duality between the two sides.

With a one-dimensional SAYD module built from a modular pair, the invariant
cyclic module and the coinvariant cocyclic module are exchanged by theta_bar.
"""

# %%
from hopfcyclic import (
    builtin_hopf,
    check_relations,
    coinvariant_cocyclic,
    cyclic_dims,
    invariant_cyclic,
    involution_pairs,
    sayd_from_modular_pair,
    verify_sayd,
)
from hopfcyclic.theorems import verify_identifications, verify_invariant_duality

H = builtin_hopf("h4")
pairs = involution_pairs(H)

# %% each pair gives a stable anti-Yetter-Drinfeld module of dimension one
for p in pairs:
    M = sayd_from_modular_pair(H, p)
    print(p.label(H), "SAYD:", verify_sayd(H, M).ok)

# %% invariants are cyclic even when the ambient module is only paracyclic
M = sayd_from_modular_pair(H, pairs[1])
for build in (invariant_cyclic, coinvariant_cocyclic):
    X = build(H, M, 3)
    rep = check_relations(X)
    print("%-10s dims %-12s relations %s cyclic %s" % (X.name, X.dims, rep.ok, rep.meta["cyclic"]))

# %% theta_bar: invertible, commutes with every operator, same cyclic homology
rep = verify_invariant_duality(H, M, 3)
print("duality checks:", len(rep.checks), "failed:", len(rep.failures()))
print("HC on the invariant side:", cyclic_dims(invariant_cyclic(H, M, 3)).as_list())

# %% with trivial coefficients both sides are the classical complexes
rep = verify_identifications(H, pairs[1], 3)
print("identifications ok:", rep.ok, " target pair:", rep.meta["cm_pair"])
print("end-absorbing map as a comparison:", rep.meta["phi_bar_vs_cm"])
