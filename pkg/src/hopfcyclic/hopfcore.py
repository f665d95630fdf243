"""Finite-dimensional Hopf algebras by structure constants, and their modules.

Structure maps are stored as matrices (source -> target, acting on columns).
Sweedler legs are obtained by composing the comultiplication with itself and
reading the result column by column; the sparse tables below are caches of
those matrices, never an independent description of the algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations, product

from .errors import (
    IdentificationFailure,
    NotAGroup,
    NotInInvolution,
    NotModularPair,
    SAYDViolation,
    ShapeMismatch,
)
from .exactfield import QQ, Field, Matrix, Quotient, inverse, kernel_basis, quotient_data
from .report import Report
from .tensor import add_to, operator_matrix, outer, permutation_matrix, tensor_labels, tensor_tuple

VARIANTS = ("LL", "LR", "RL", "RR")


@dataclass(frozen=True)
class BasedSpace:
    dim: int
    labels: tuple
    field: Field = QQ

    def __post_init__(self):
        if len(self.labels) != self.dim:
            raise ShapeMismatch("%d labels for a %d-dimensional space" % (len(self.labels), self.dim))
        if len(set(self.labels)) != self.dim:
            raise ValueError("basis labels must be distinct")


def _vec_from_column(m: Matrix, j: int) -> dict:
    return {i: m[i, j] for i in range(m.rows) if m[i, j]}


class HopfAlgebra:
    """Structure-constant Hopf algebra.

    ``mult`` is d x d^2, ``unit`` d x 1, ``comult`` d^2 x d, ``counit`` 1 x d,
    ``antipode`` d x d.  Construction only checks shapes; run
    :func:`verify_hopf_axioms` (the builders in this module do) for the axioms.
    """

    def __init__(self, space: BasedSpace, mult, unit, comult, counit, antipode, name=None):
        d = space.dim
        expected = {
            "mult": (mult, (d, d * d)),
            "unit": (unit, (d, 1)),
            "comult": (comult, (d * d, d)),
            "counit": (counit, (1, d)),
            "antipode": (antipode, (d, d)),
        }
        for key, (m, shape) in expected.items():
            if m.shape != shape:
                raise ShapeMismatch("%s has shape %s, expected %s" % (key, m.shape, shape))
            if m.field != space.field:
                raise ShapeMismatch("%s is over %s, space over %s" % (key, m.field.tag, space.field.tag))
        self.space = space
        self.mult = mult
        self.unit = unit
        self.comult = comult
        self.counit = counit
        self.antipode = antipode
        self.name = name

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def field(self) -> Field:
        return self.space.field

    @property
    def labels(self) -> tuple:
        return self.space.labels

    def __repr__(self):
        return "HopfAlgebra(%s, dim=%d, %s)" % (self.name or "?", self.dim, self.field.tag)

    @cached_property
    def antipode_inv(self) -> Matrix:
        return inverse(self.antipode)

    # sparse caches of the structure matrices

    @cached_property
    def _mul(self):
        d = self.dim
        cols = self.mult.columns()
        return [[cols[i * d + j] for j in range(d)] for i in range(d)]

    @cached_property
    def one(self) -> dict:
        return _vec_from_column(self.unit, 0)

    @cached_property
    def _eps(self):
        return [self.counit[0, i] for i in range(self.dim)]

    @cached_property
    def _S(self):
        return self.antipode.columns()

    @cached_property
    def _Sinv(self):
        return self.antipode_inv.columns()

    @cached_property
    def _cop_cache(self):
        return {1: [{(i,): 1} for i in range(self.dim)]}

    def coproduct_legs(self, i: int, legs: int) -> dict:
        """Delta^{legs-1}(e_i) as ``{(a_1, ..., a_legs): coef}``.

        Built as (Delta (x) id^{k-1}) o Delta^{k-1}, i.e. the matrix composite,
        evaluated column by column.
        """
        cache = self._cop_cache
        if legs not in cache:
            self.coproduct_legs(0, legs - 1)
            prev = cache[legs - 1]
            two = self.comult.columns()
            d = self.dim
            table = []
            for j in range(d):
                acc = {}
                for key, c in prev[j].items():
                    for ab, v in two[key[0]].items():
                        a, b = divmod(ab, d)
                        add_to(acc, (a, b) + key[1:], c * v)
                table.append(acc)
            cache[legs] = table
        return cache[legs][i]

    def eps(self, v: dict):
        e = self._eps
        return sum(c * e[i] for i, c in v.items())

    def mul(self, u: dict, v: dict) -> dict:
        out = {}
        table = self._mul
        for i, a in u.items():
            row = table[i]
            for j, b in v.items():
                for k, c in row[j].items():
                    add_to(out, k, a * b * c)
        return out

    def product(self, vecs) -> dict:
        out = self.one
        for v in vecs:
            out = self.mul(out, v)
        return out

    def S(self, v: dict) -> dict:
        return _apply(self._S, v)

    def Sinv(self, v: dict) -> dict:
        return _apply(self._Sinv, v)

    @staticmethod
    def basis(i: int) -> dict:
        return {i: 1}


def _apply(cols, v: dict) -> dict:
    out = {}
    for i, a in v.items():
        for k, c in cols[i].items():
            add_to(out, k, a * c)
    return out


def flip_matrix(field: Field, d1: int, d2: int) -> Matrix:
    return permutation_matrix(field, [d1, d2], [1, 0])


def verify_hopf_axioms(H: HopfAlgebra) -> Report:
    """Every Hopf axiom as an exact matrix identity."""
    F, d = H.field, H.dim
    m, u, D, e, S = H.mult, H.unit, H.comult, H.counit, H.antipode
    I = Matrix.identity(F, d)
    one = Matrix.identity(F, 1)
    rep = Report("hopf-axioms", meta={"dim": d, "field": F.tag, "name": H.name})
    rep.add("associativity", m @ m.kron(I) == m @ I.kron(m))
    rep.add("unitality", m @ u.kron(I) == I and m @ I.kron(u) == I)
    rep.add("coassociativity", D.kron(I) @ D == I.kron(D) @ D)
    rep.add("counitality", e.kron(I) @ D == I and I.kron(e) @ D == I)
    mid = I.kron(flip_matrix(F, d, d)).kron(I)
    rep.add("comult-multiplicative", D @ m == m.kron(m) @ mid @ D.kron(D))
    rep.add("comult-unital", D @ u == u.kron(u))
    rep.add("counit-multiplicative", e @ m == e.kron(e))
    rep.add("counit-unital", e @ u == one)
    ue = u @ e
    rep.add("antipode-left", m @ S.kron(I) @ D == ue)
    rep.add("antipode-right", m @ I.kron(S) @ D == ue)
    return rep


def is_cocommutative(H: HopfAlgebra) -> bool:
    return flip_matrix(H.field, H.dim, H.dim) @ H.comult == H.comult


def antipode_inverse(H: HopfAlgebra) -> Matrix:
    return H.antipode_inv


# builders


def _checked(H: HopfAlgebra) -> HopfAlgebra:
    rep = verify_hopf_axioms(H)
    if not rep.ok:
        raise AssertionError("builder produced a non-Hopf algebra: %s" % [c.name for c in rep.failures()])
    return H


def group_algebra(table, labels=None, field: Field = QQ, name=None) -> HopfAlgebra:
    """k[G] from a multiplication table ``table[i][j] = index of g_i g_j``."""
    n = len(table)
    if n == 0 or any(len(r) != n for r in table):
        raise NotAGroup("multiplication table must be square and non-empty")
    if any(not (0 <= x < n) for r in table for x in r):
        raise NotAGroup("table entries out of range")
    units = [e for e in range(n) if all(table[e][j] == j and table[j][e] == j for j in range(n))]
    if not units:
        raise NotAGroup("no identity element")
    e = units[0]
    for a, b, c in product(range(n), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise NotAGroup("not associative at (%d, %d, %d)" % (a, b, c))
    inv = []
    for a in range(n):
        bs = [b for b in range(n) if table[a][b] == e and table[b][a] == e]
        if not bs:
            raise NotAGroup("element %d has no inverse" % a)
        inv.append(bs[0])
    labels = tuple(labels) if labels is not None else tuple("g%d" % i for i in range(n))
    space = BasedSpace(n, labels, field)
    mult = Matrix.from_dict(field, n, n * n, {(table[a][b], a * n + b): 1 for a in range(n) for b in range(n)})
    unit = Matrix.from_dict(field, n, 1, {(e, 0): 1})
    comult = Matrix.from_dict(field, n * n, n, {(a * n + a, a): 1 for a in range(n)})
    counit = Matrix.from_dict(field, 1, n, {(0, a): 1 for a in range(n)})
    antipode = Matrix.from_dict(field, n, n, {(inv[a], a): 1 for a in range(n)})
    return _checked(HopfAlgebra(space, mult, unit, comult, counit, antipode, name=name))


def cyclic_group_table(n: int):
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def symmetric_group_table(n: int = 3):
    perms = list(permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    # (p*q)(x) = p(q(x))
    table = [[index[tuple(p[q[x]] for x in range(n))] for q in perms] for p in perms]
    labels = ["".join(str(x) for x in p) for p in perms]
    return table, labels


def ground_field(field: Field = QQ) -> HopfAlgebra:
    one = Matrix.identity(field, 1)
    space = BasedSpace(1, ("1",), field)
    return _checked(HopfAlgebra(space, one, one, one, one, one, name="k"))


def sweedler_h4(field: Field = QQ) -> HopfAlgebra:
    """Basis 1, g, x, gx with g^2 = 1, x^2 = 0, xg = -gx, Dx = x(x)1 + g(x)x."""
    labels = ("1", "g", "x", "gx")
    one, g, x, gx = range(4)
    d = 4
    prod_table = {
        (one, one): {one: 1}, (one, g): {g: 1}, (one, x): {x: 1}, (one, gx): {gx: 1},
        (g, one): {g: 1}, (g, g): {one: 1}, (g, x): {gx: 1}, (g, gx): {x: 1},
        (x, one): {x: 1}, (x, g): {gx: -1}, (x, x): {}, (x, gx): {},
        (gx, one): {gx: 1}, (gx, g): {x: -1}, (gx, x): {}, (gx, gx): {},
    }
    mult = Matrix.from_dict(
        field, d, d * d, {(k, a * d + b): c for (a, b), v in prod_table.items() for k, c in v.items()}
    )
    unit = Matrix.from_dict(field, d, 1, {(one, 0): 1})
    cop = {
        one: {(one, one): 1},
        g: {(g, g): 1},
        x: {(x, one): 1, (g, x): 1},
        gx: {(gx, g): 1, (one, gx): 1},
    }
    comult = Matrix.from_dict(field, d * d, d, {(a * d + b, i): c for i, v in cop.items() for (a, b), c in v.items()})
    counit = Matrix.from_dict(field, 1, d, {(0, one): 1, (0, g): 1})
    antipode = Matrix.from_dict(field, d, d, {(one, one): 1, (g, g): 1, (gx, x): -1, (x, gx): 1})
    return _checked(HopfAlgebra(BasedSpace(d, labels, field), mult, unit, comult, counit, antipode, name="h4"))


def dual_hopf(H: HopfAlgebra) -> HopfAlgebra:
    """Dual Hopf algebra on the dual basis: transposes with roles swapped."""
    space = BasedSpace(H.dim, tuple("%s*" % l for l in H.labels), H.field)
    name = "%s-dual" % H.name if H.name else None
    G = HopfAlgebra(space, H.comult.T, H.counit.T, H.mult.T, H.unit.T, H.antipode.T, name=name)
    return _checked(G)


def opposite_hopf(H: HopfAlgebra) -> HopfAlgebra:
    """H^op: same coalgebra, multiplication composed with the flip, antipode S^-1."""
    flip = permutation_matrix(H.field, (H.dim, H.dim), (1, 0))
    name = "%s-op" % H.name if H.name else None
    return _checked(HopfAlgebra(H.space, H.mult @ flip, H.unit, H.comult, H.counit, inverse(H.antipode), name=name))


def opposite_isomorphism(H: HopfAlgebra) -> Matrix:
    """A Hopf isomorphism H^op -> H, found by trying the obvious candidates.

    The identity works when H is commutative and S when H is cocommutative.
    Otherwise sign changes of basis vectors are tried, possibly after S; this
    covers the built-in examples.  Raises IdentificationFailure when nothing is found.
    """
    op = opposite_hopf(H)
    ident = Matrix.identity(H.field, H.dim)
    bases = (ident, H.antipode)
    for base in bases:
        if is_hopf_morphism(op, H, base):
            return base
    for signs in product((1, -1), repeat=H.dim):
        if all(s == 1 for s in signs):
            continue
        diag = Matrix.from_dict(H.field, H.dim, H.dim, {(i, i): s for i, s in enumerate(signs)})
        for base in bases:
            cand = diag @ base
            if is_hopf_morphism(op, H, cand):
                return cand
    raise IdentificationFailure("no Hopf isomorphism H^op -> H among the tried candidates")


BUILTIN_NAMES = ("k","c2", "c3", "c4", "s3", "h4")


def builtin_hopf(name: str, field: Field = QQ) -> HopfAlgebra:
    """Built-in examples: k, c2, c3, c4, s3, h4, and ``<name>-dual`` for each."""
    if name.endswith("-dual"):
        return dual_hopf(builtin_hopf(name[: -len("-dual")], field))
    if name == "k":
        return ground_field(field)
    if name in ("c1",):
        return group_algebra(cyclic_group_table(1), ["e"], field, name="c1")
    if name in ("c2", "c3", "c4"):
        n = int(name[1])
        labels = ["e"] + ["g" if k == 1 else "g%d" % k for k in range(1, n)]
        return group_algebra(cyclic_group_table(n), labels, field, name=name)
    if name == "s3":
        table, labels = symmetric_group_table(3)
        return group_algebra(table, labels, field, name="s3")
    if name == "h4":
        return sweedler_h4(field)
    raise KeyError("unknown built-in Hopf algebra %r" % name)


def is_hopf_morphism(H: HopfAlgebra, G: HopfAlgebra, f: Matrix) -> bool:
    """f: H -> G (a G.dim x H.dim matrix) preserves all structure maps."""
    return (
        f @ H.mult == G.mult @ f.kron(f)
        and f @ H.unit == G.unit
        and G.comult @ f == f.kron(f) @ H.comult
        and G.counit @ f == H.counit
        and G.antipode @ f == f @ H.antipode
    )


# characters, grouplikes, modular pairs


def is_character(H: HopfAlgebra, functional: Matrix) -> bool:
    if functional.shape != (1, H.dim):
        raise ShapeMismatch("character must be 1 x %d" % H.dim)
    return functional @ H.mult == functional.kron(functional) and functional @ H.unit == Matrix.identity(H.field, 1)


def is_grouplike(H: HopfAlgebra, vector: Matrix) -> bool:
    if vector.shape != (H.dim, 1):
        raise ShapeMismatch("grouplike must be %d x 1" % H.dim)
    return H.comult @ vector == vector.kron(vector) and H.counit @ vector == Matrix.identity(H.field, 1)


def character(H: HopfAlgebra, values) -> Matrix:
    f = Matrix.from_rows(H.field, [list(values)])
    if not is_character(H, f):
        raise ValueError("%r is not an algebra map" % (list(values),))
    return f


def grouplike(H: HopfAlgebra, coords) -> Matrix:
    v = Matrix.from_rows(H.field, [[c] for c in coords])
    if not is_grouplike(H, v):
        raise ValueError("%r is not grouplike" % (list(coords),))
    return v


def find_characters(H: HopfAlgebra, box=(-1, 0, 1)) -> list:
    """Characters whose values on the basis lie in ``box`` (exhaustive, tiny H only)."""
    out = []
    for vals in product(box, repeat=H.dim):
        f = Matrix.from_rows(H.field, [list(vals)])
        if is_character(H, f):
            out.append(f)
    return out


def find_grouplikes(H: HopfAlgebra, box=(-1, 0, 1)) -> list:
    out = []
    for vals in product(box, repeat=H.dim):
        v = Matrix.from_rows(H.field, [[c] for c in vals])
        if is_grouplike(H, v):
            out.append(v)
    return out


def twisted_antipode(H: HopfAlgebra, delta: Matrix) -> Matrix:
    """h -> delta(h^(1)) S(h^(2))."""
    I = Matrix.identity(H.field, H.dim)
    return H.antipode @ delta.kron(I) @ H.comult


def left_multiplication(H: HopfAlgebra, a: Matrix) -> Matrix:
    return H.mult @ a.kron(Matrix.identity(H.field, H.dim))


@dataclass(frozen=True)
class ModularPair:
    delta: Matrix
    sigma: Matrix
    in_involution: bool

    def label(self, H: HopfAlgebra) -> str:
        dv = ",".join(H.field.format(self.delta[0, i]) for i in range(H.dim))
        sv = ",".join(H.field.format(self.sigma[i, 0]) for i in range(H.dim))
        return "delta=(%s) sigma=(%s)" % (dv, sv)


def verify_modular_pair(H: HopfAlgebra, delta: Matrix, sigma: Matrix) -> ModularPair:
    if not is_character(H, delta):
        raise NotModularPair("delta is not a character")
    if not is_grouplike(H, sigma):
        raise NotModularPair("sigma is not grouplike")
    if delta @ sigma != Matrix.identity(H.field, 1):
        raise NotModularPair("delta(sigma) != 1")
    sigma_inv = H.antipode @ sigma
    op = left_multiplication(H, sigma_inv) @ twisted_antipode(H, delta)
    return ModularPair(delta, sigma, (op @ op).is_identity())


def trivial_pair(H: HopfAlgebra) -> ModularPair:
    return verify_modular_pair(H, H.counit, H.unit)


def modular_pairs(H: HopfAlgebra, box=(-1, 0, 1)) -> list:
    """All modular pairs (characters x grouplikes from the search box)."""
    out = []
    for delta in find_characters(H, box):
        for sigma in find_grouplikes(H, box):
            if delta @ sigma == Matrix.identity(H.field, 1):
                out.append(verify_modular_pair(H, delta, sigma))
    return out


def involution_pairs(H: HopfAlgebra, box=(-1, 0, 1)) -> list:
    return [p for p in modular_pairs(H, box) if p.in_involution]


def auto_pair(H: HopfAlgebra) -> ModularPair:
    """First modular pair in involution of the search; the trivial pair preferred."""
    triv = trivial_pair(H)
    if triv.in_involution:
        return triv
    pairs = involution_pairs(H)
    if not pairs:
        raise NotInInvolution("no modular pair in involution in the search box")
    return pairs[0]


# modules and comodules


class SAYDModule:
    """Finite-dimensional H-module and H-comodule.

    ``variant`` is module side then comodule side: LR = left module, right
    comodule.  Left action is m x (d*m) on H (x) M, right action m x (m*d) on
    M (x) H; right coaction is (m*d) x m into M (x) H, left coaction (d*m) x m
    into H (x) M.
    """

    def __init__(self, space: BasedSpace, variant: str, action: Matrix, coaction: Matrix, H_dim: int):
        if variant not in VARIANTS:
            raise ValueError("variant must be one of %s" % (VARIANTS,))
        m, d = space.dim, H_dim
        if action.shape != (m, d * m):
            raise ShapeMismatch("action has shape %s, expected %s" % (action.shape, (m, d * m)))
        if coaction.shape != (d * m, m):
            raise ShapeMismatch("coaction has shape %s, expected %s" % (coaction.shape, (d * m, m)))
        self.space = space
        self.variant = variant
        self.action = action
        self.coaction = coaction
        self.H_dim = d

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def left_module(self) -> bool:
        return self.variant[0] == "L"

    @property
    def right_comodule(self) -> bool:
        return self.variant[1] == "R"

    @cached_property
    def _act(self):
        d, m = self.H_dim, self.dim
        cols = self.action.columns()
        if self.left_module:
            return [[cols[h * m + k] for k in range(m)] for h in range(d)]
        return [[cols[k * d + h] for k in range(m)] for h in range(d)]

    def act(self, h: int, v: dict) -> dict:
        """h acting on the vector v (from the module's side)."""
        out = {}
        row = self._act[h]
        for k, a in v.items():
            for j, c in row[k].items():
                add_to(out, j, a * c)
        return out

    def act_vec(self, hv: dict, v: dict) -> dict:
        out = {}
        for h, a in hv.items():
            for j, c in self.act(h, v).items():
                add_to(out, j, a * c)
        return out

    @cached_property
    def _coact(self):
        """Per basis m: list of ``(m0, h, coef)`` regardless of side."""
        d, m = self.H_dim, self.dim
        out = []
        for k, col in enumerate(self.coaction.columns()):
            terms = []
            for idx, c in col.items():
                if self.right_comodule:
                    m0, h = divmod(idx, d)
                else:
                    h, m0 = divmod(idx, m)
                terms.append((m0, h, c))
            out.append(terms)
        return out

    def coact(self, k: int) -> list:
        return self._coact[k]

    def __repr__(self):
        return "SAYDModule(%s, dim=%d)" % (self.variant, self.dim)


def one_dim_module(H: HopfAlgebra, delta: Matrix, sigma: Matrix, variant: str = "LR", label="1") -> SAYDModule:
    """k with action through delta and coaction m -> m (x) sigma (or sigma (x) m)."""
    space = BasedSpace(1, (label,), H.field)
    return SAYDModule(space, variant, delta, sigma, H.dim)


def trivial_module(H: HopfAlgebra, variant: str = "LR") -> SAYDModule:
    return one_dim_module(H, H.counit, H.unit, variant)


def _module_axioms(H: HopfAlgebra, M: SAYDModule, rep: Report):
    F, d, m = H.field, H.dim, M.dim
    Im, Id = Matrix.identity(F, m), Matrix.identity(F, d)
    A, C = M.action, M.coaction
    if M.left_module:
        rep.add("module-associativity", A @ H.mult.kron(Im) == A @ Id.kron(A))
        rep.add("module-unitality", A @ H.unit.kron(Im) == Im)
    else:
        rep.add("module-associativity", A @ Im.kron(H.mult) == A @ A.kron(Id))
        rep.add("module-unitality", A @ Im.kron(H.unit) == Im)
    if M.right_comodule:
        rep.add("comodule-coassociativity", C.kron(Id) @ C == Im.kron(H.comult) @ C)
        rep.add("comodule-counitality", Im.kron(H.counit) @ C == Im)
    else:
        rep.add("comodule-coassociativity", Id.kron(C) @ C == H.comult.kron(Im) @ C)
        rep.add("comodule-counitality", H.counit.kron(Im) @ C == Im)


def ayd_sides(H: HopfAlgebra, M: SAYDModule):
    """(lhs, rhs) matrices of the variant's anti-Yetter-Drinfeld equation."""
    F, d, m = H.field, H.dim, M.dim
    S, Sinv = H.S, H.Sinv
    e = HopfAlgebra.basis
    v = M.variant
    src = [d, m] if M.left_module else [m, d]
    tgt = [m, d] if M.right_comodule else [d, m]

    def hm(t):
        return (t[0], t[1]) if M.left_module else (t[1], t[0])

    def lhs(t):
        h, k = hm(t)
        acc = {}
        for j, a in M.act(h, {k: 1}).items():
            for m0, g, c in M.coact(j):
                key = (m0, g) if M.right_comodule else (g, m0)
                add_to(acc, key, a * c)
        return acc

    def rhs(t):
        h, k = hm(t)
        acc = {}
        for (h1, h2, h3), c in H.coproduct_legs(h, 3).items():
            for m0, g, cc in M.coact(k):
                coef = c * cc
                if v == "LL":
                    hh = H.product([e(h1), e(g), Sinv(e(h3))])
                    mm = M.act(h2, {m0: 1})
                    outer(coef, [hh, mm], acc)
                elif v == "LR":
                    mm = M.act(h2, {m0: 1})
                    hh = H.product([e(h3), e(g), S(e(h1))])
                    outer(coef, [mm, hh], acc)
                elif v == "RL":
                    hh = H.product([S(e(h3)), e(g), e(h1)])
                    mm = M.act(h2, {m0: 1})
                    outer(coef, [hh, mm], acc)
                else:
                    mm = M.act(h2, {m0: 1})
                    hh = H.product([Sinv(e(h1)), e(g), e(h3)])
                    outer(coef, [mm, hh], acc)
        return acc

    return operator_matrix(F, src, tgt, lhs), operator_matrix(F, src, tgt, rhs)


def stability_map(H: HopfAlgebra, M: SAYDModule) -> Matrix:
    """m -> (coaction leg in H) acting on (module leg); should be the identity."""

    def fn(t):
        acc = {}
        for m0, g, c in M.coact(t[0]):
            for j, a in M.act(g, {m0: 1}).items():
                add_to(acc, (j,), c * a)
        return acc

    return operator_matrix(H.field, [M.dim], [M.dim], fn)


def verify_sayd(H: HopfAlgebra, M: SAYDModule) -> Report:
    if M.H_dim != H.dim or M.space.field != H.field:
        raise ShapeMismatch("module built for a different Hopf algebra")
    rep = Report("sayd", meta={"variant": M.variant, "dim": M.dim, "field": H.field.tag})
    _module_axioms(H, M, rep)
    lhs, rhs = ayd_sides(H, M)
    rep.add("anti-yetter-drinfeld-%s" % M.variant, lhs == rhs)
    rep.add("stability", stability_map(H, M).is_identity())
    return rep


def sayd_from_modular_pair(H: HopfAlgebra, pair: ModularPair, variant: str = "LR") -> SAYDModule:
    """k acting through delta, coacting through sigma; checked before it is returned."""
    if not pair.in_involution:
        raise NotInInvolution("modular pair is not in involution")
    M = one_dim_module(H, pair.delta, pair.sigma, variant)
    rep = verify_sayd(H, M)
    if not rep.ok:
        raise SAYDViolation("k_(delta,sigma) fails %s" % [c.name for c in rep.failures()])
    return M


# cotensor and balanced tensor spaces


def diagonal_left_coaction(H: HopfAlgebra, k: int) -> Matrix:
    """H^{(x)k} -> H (x) H^{(x)k}, h_1..h_k -> h_1^(1)...h_k^(1) (x) h_1^(2) (x) ... (x) h_k^(2)."""
    d = H.dim
    e = HopfAlgebra.basis

    def fn(t):
        acc = {}
        splits = [H.coproduct_legs(h, 2).items() for h in t]
        for terms in product(*splits):
            coef = 1
            firsts = []
            rest = []
            for (a, b), c in terms:
                coef *= c
                firsts.append(e(a))
                rest.append(b)
            for g, c in H.product(firsts).items():
                add_to(acc, (g,) + tuple(rest), coef * c)
        return acc

    return operator_matrix(H.field, [d] * k, [d] * (k + 1), fn)


def cotensor_subspace(M_coaction: Matrix, M_dim: int, N_coaction: Matrix, N_dim: int, H_dim: int) -> Matrix:
    """Inclusion of M box_H N = ker(coaction_M (x) 1 - 1 (x) coaction_N) in M (x) N.

    ``M_coaction`` is a right coaction (M*d x M), ``N_coaction`` a left one (d*N x N).
    """
    F = M_coaction.field
    lhs = M_coaction.kron(Matrix.identity(F, N_dim))
    rhs = Matrix.identity(F, M_dim).kron(N_coaction)
    if lhs.shape != rhs.shape or lhs.rows != M_dim * H_dim * N_dim:
        raise ShapeMismatch("coaction shapes do not match")
    return kernel_basis(lhs - rhs)


def invariant_chains(H: HopfAlgebra, M: SAYDModule, n: int) -> Matrix:
    """Inclusion of M box_H H^{(x)(n+1)} in M (x) H^{(x)(n+1)} (diagonal left coaction)."""
    if not M.right_comodule:
        raise ShapeMismatch("cotensor needs a right comodule M")
    N_co = diagonal_left_coaction(H, n + 1)
    return cotensor_subspace(M.coaction, M.dim, N_co, H.dim ** (n + 1), H.dim)


def balanced_relations(H: HopfAlgebra, n: int, M: SAYDModule) -> Matrix:
    """Columns (x.g) (x) m - x (x) (g.m) spanning the kernel of H^{(x)(n+1)} (x) M -> H^{(x)(n+1)} (x)_H M.

    x.g is the diagonal right action x_0 g^(1) (x) ... (x) x_n g^(n+1).
    """
    if not M.left_module:
        raise ShapeMismatch("balanced tensor needs a left module M")
    d, m = H.dim, M.dim
    e = HopfAlgebra.basis
    k = n + 1

    def fn(t):
        x, g, mm = t[:k], t[k], t[k + 1]
        acc = {}
        for legs, c in H.coproduct_legs(g, k).items():
            outer(c, [H.mul(e(xi), e(gi)) for xi, gi in zip(x, legs)] + [{mm: 1}], acc)
        outer(-1, [e(xi) for xi in x] + [M.act(g, {mm: 1})], acc)
        return acc

    return operator_matrix(H.field, [d] * k + [d, m], [d] * k + [m], fn)


def h_tensor_quotient(H: HopfAlgebra, n: int, M: SAYDModule) -> Quotient:
    span = balanced_relations(H, n, M)
    return quotient_data(span, span.rows)


def module_labels(H: HopfAlgebra, M: SAYDModule, n_h: int, m_first: bool) -> list:
    parts = [list(H.labels)] * n_h
    parts = ([list(M.space.labels)] + parts) if m_first else (parts + [list(M.space.labels)])
    return tensor_labels(parts)


__all__ = [
    "BasedSpace", "HopfAlgebra", "ModularPair", "SAYDModule", "VARIANTS", "BUILTIN_NAMES",
    "verify_hopf_axioms", "antipode_inverse", "group_algebra", "cyclic_group_table",
    "symmetric_group_table", "ground_field", "sweedler_h4", "dual_hopf", "builtin_hopf",
    "is_cocommutative", "is_hopf_morphism", "opposite_hopf", "opposite_isomorphism", "is_character", "is_grouplike", "character", "grouplike",
    "find_characters", "find_grouplikes", "twisted_antipode", "left_multiplication",
    "verify_modular_pair", "trivial_pair", "modular_pairs", "involution_pairs", "auto_pair",
    "one_dim_module", "trivial_module", "verify_sayd", "ayd_sides", "stability_map",
    "sayd_from_modular_pair", "diagonal_left_coaction", "cotensor_subspace", "invariant_chains",
    "balanced_relations", "h_tensor_quotient", "tensor_tuple",
]
