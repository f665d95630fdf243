"""Hochschild and cyclic homology of a few small algebras, two ways."""

# %%
from hopfcyclic import (
    algebra_cyclic,
    builtin_hopf,
    connes_dims,
    cyclic_dims,
    hochschild_dims,
)
from hopfcyclic.exactfield import GF

# %% the ground field: HC is k in even degrees
X = algebra_cyclic(builtin_hopf("k"), 4)
print("HC(k) bicomplex:", cyclic_dims(X).as_list())
print("HC(k) quotient: ", connes_dims(X).as_list())

# %% group algebras over Q are semisimple, so HH lives in degree 0 (one class per conjugacy class)
for name in ("c2", "c3", "s3"):
    H = builtin_hopf(name)
    N = 4 if H.dim < 6 else 3
    print("HH(%s) =" % name, hochschild_dims(algebra_cyclic(H, N)).as_list())

# %% in characteristic p dividing the group order the picture changes completely
Hp = builtin_hopf("c2", GF(2))
print("HH(F2[C2]) =", hochschild_dims(algebra_cyclic(Hp, 4)).as_list())

# %% truncation: a module built up to degree N gives exact answers up to N - 1
rep = cyclic_dims(algebra_cyclic(builtin_hopf("c2"), 4))
print(rep.table())
