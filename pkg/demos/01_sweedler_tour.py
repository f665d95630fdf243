"""A walk through Sweedler's four-dimensional Hopf algebra.

Run with `python3 demos/01_sweedler_tour.py`.  Every number printed is exact.
"""

# %%
import numpy as np

from hopfcyclic import builtin_hopf, involution_pairs, verify_hopf_axioms

H = builtin_hopf("h4")
print(H.name, "dim", H.dim, "basis", H.space.labels)

# %% the structure maps are plain matrices acting on columns
print("antipode:")
print(np.array(H.antipode.to_strings()))
S2 = H.antipode @ H.antipode
print("S^2 == id?", S2.is_identity(), "  S^4 == id?", (S2 @ S2).is_identity())

# %% ten axioms, each a named check
rep = verify_hopf_axioms(H)
for check in rep.checks:
    print("  %-22s %s" % (check.name, "ok" if check.passed else "FAILED"))

# %% H4 is neither commutative nor cocommutative, yet it has two modular pairs in involution
for p in involution_pairs(H):
    print("pair:", p.label(H))
