"""Tensor-basis bookkeeping and sparse multilinear expansion.

Basis of V_1 (x) ... (x) V_m is lexicographic with the leftmost factor most
significant: index(i_1, ..., i_m) = sum_j i_j * prod_{l>j} d_l.  Every module in
the package goes through :func:`tensor_index` so the convention lives here only.
"""

from __future__ import annotations

from itertools import product
from math import prod

from .exactfield import Field, Matrix


def tensor_index(idx, dims) -> int:
    k = 0
    for i, d in zip(idx, dims):
        k = k * d + i
    return k


def tensor_tuple(k: int, dims) -> tuple:
    out = []
    for d in reversed(dims):
        k, r = divmod(k, d)
        out.append(r)
    return tuple(reversed(out))


def basis_tuples(dims):
    return product(*(range(d) for d in dims))


def tensor_labels(label_lists) -> list:
    if not label_lists:
        return ["1"]
    return ["⊗".join(parts) for parts in product(*label_lists)]


def add_to(acc: dict, key, coef):
    v = acc.get(key, 0) + coef
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


def outer(coef, legs, acc: dict):
    """acc += coef * legs[0] (x) legs[1] (x) ...; each leg is ``{index: coef}``."""
    terms = [((), coef)]
    for leg in legs:
        nxt = []
        for key, c in terms:
            for i, v in leg.items():
                nxt.append((key + (i,), c * v))
        terms = nxt
    for key, c in terms:
        add_to(acc, key, c)


def operator_matrix(field: Field, src_dims, tgt_dims, fn) -> Matrix:
    """Matrix of the linear map sending basis tuple ``t`` to ``fn(t)``.

    ``fn`` returns ``{target_tuple: coef}``.
    """
    columns = []
    for t in basis_tuples(src_dims):
        out = fn(t)
        col = {}
        for key, v in out.items():
            if v:
                col[tensor_index(key, tgt_dims)] = v
        columns.append(col)
    return Matrix.from_columns(field, prod(tgt_dims), columns)


def permutation_matrix(field: Field, dims, perm) -> Matrix:
    """Moves factor ``perm[j]`` of the source into position j of the target."""
    tgt = [dims[p] for p in perm]
    return operator_matrix(field, dims, tgt, lambda t: {tuple(t[p] for p in perm): 1})


def identity_on(field: Field, dims) -> Matrix:
    return Matrix.identity(field, prod(dims))
