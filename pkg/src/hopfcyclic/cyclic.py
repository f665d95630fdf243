"""Truncated (para)cyclic and (para)cocyclic modules, their relation checkers,
and the cyclic-duality functors between them.

Index conventions, for a module truncated at degree N:

* faces ``delta_i : X_n -> X_{n-1}``, 0 <= i <= n, for 1 <= n <= N;
* degeneracies ``sigma_i : X_n -> X_{n+1}``, 0 <= i <= n, for 0 <= n <= N-1;
* cofaces ``d_i : X^n -> X^{n+1}``, 0 <= i <= n+1, for 0 <= n <= N-1;
* codegeneracies ``s_i : X^n -> X^{n-1}``, 0 <= i <= n-1, for 1 <= n <= N;
* cyclic operators ``tau_n`` / ``t_n`` for 0 <= n <= N.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ShapeMismatch
from .exactfield import Field, Matrix, Quotient, Subspace, inverse, rank
from .report import Report


def _check_shape(m: Matrix, rows: int, cols: int, what: str):
    if m.shape != (rows, cols):
        raise ShapeMismatch("%s has shape %s, expected %s" % (what, m.shape, (rows, cols)))


class ParaCyclicModule:
    kind = "paracyclic"

    def __init__(self, field: Field, dims, faces, degeneracies, cyclic, name=None, labels=None):
        self.field = field
        self.dims = list(dims)
        N = len(self.dims) - 1
        if N < 0:
            raise ShapeMismatch("module needs at least degree 0")
        self.faces = [list(fs) for fs in faces]
        self.degeneracies = [list(ds) for ds in degeneracies]
        self.cyclic = list(cyclic)
        if len(self.faces) != N + 1 or len(self.degeneracies) != N + 1 or len(self.cyclic) != N + 1:
            raise ShapeMismatch("operator lists must have one entry per degree 0..%d" % N)
        for n in range(N + 1):
            want = n + 1 if n >= 1 else 0
            if len(self.faces[n]) != want:
                raise ShapeMismatch("degree %d needs %d faces, got %d" % (n, want, len(self.faces[n])))
            for i, f in enumerate(self.faces[n]):
                _check_shape(f, self.dims[n - 1], self.dims[n], "face %d in degree %d" % (i, n))
            want = n + 1 if n < N else 0
            if len(self.degeneracies[n]) != want:
                raise ShapeMismatch("degree %d needs %d degeneracies, got %d" % (n, want, len(self.degeneracies[n])))
            for i, s in enumerate(self.degeneracies[n]):
                _check_shape(s, self.dims[n + 1], self.dims[n], "degeneracy %d in degree %d" % (i, n))
            _check_shape(self.cyclic[n], self.dims[n], self.dims[n], "cyclic operator in degree %d" % n)
        self.name = name
        self.labels = labels

    @property
    def N(self) -> int:
        return len(self.dims) - 1

    def face(self, n: int, i: int) -> Matrix:
        return self.faces[n][i]

    def degeneracy(self, n: int, i: int) -> Matrix:
        return self.degeneracies[n][i]

    def tau(self, n: int) -> Matrix:
        return self.cyclic[n]

    def truncate(self, N: int) -> "ParaCyclicModule":
        if N > self.N:
            raise ValueError("cannot extend a truncation")
        degs = [list(self.degeneracies[n]) if n < N else [] for n in range(N + 1)]
        return ParaCyclicModule(self.field, self.dims[: N + 1], self.faces[: N + 1], degs, self.cyclic[: N + 1], self.name)

    def __repr__(self):
        return "ParaCyclicModule(%s, dims=%s)" % (self.name or "?", self.dims)


class ParaCocyclicModule:
    kind = "paracocyclic"

    def __init__(self, field: Field, dims, cofaces, codegeneracies, cyclic, name=None, labels=None):
        self.field = field
        self.dims = list(dims)
        N = len(self.dims) - 1
        if N < 0:
            raise ShapeMismatch("module needs at least degree 0")
        self.cofaces = [list(fs) for fs in cofaces]
        self.codegeneracies = [list(ss) for ss in codegeneracies]
        self.cyclic = list(cyclic)
        if len(self.cofaces) != N + 1 or len(self.codegeneracies) != N + 1 or len(self.cyclic) != N + 1:
            raise ShapeMismatch("operator lists must have one entry per degree 0..%d" % N)
        for n in range(N + 1):
            want = n + 2 if n < N else 0
            if len(self.cofaces[n]) != want:
                raise ShapeMismatch("degree %d needs %d cofaces, got %d" % (n, want, len(self.cofaces[n])))
            for i, d in enumerate(self.cofaces[n]):
                _check_shape(d, self.dims[n + 1], self.dims[n], "coface %d in degree %d" % (i, n))
            if len(self.codegeneracies[n]) != n:
                raise ShapeMismatch("degree %d needs %d codegeneracies, got %d" % (n, n, len(self.codegeneracies[n])))
            for i, s in enumerate(self.codegeneracies[n]):
                _check_shape(s, self.dims[n - 1], self.dims[n], "codegeneracy %d in degree %d" % (i, n))
            _check_shape(self.cyclic[n], self.dims[n], self.dims[n], "cyclic operator in degree %d" % n)
        self.name = name
        self.labels = labels

    @property
    def N(self) -> int:
        return len(self.dims) - 1

    def coface(self, n: int, i: int) -> Matrix:
        return self.cofaces[n][i]

    def codegeneracy(self, n: int, i: int) -> Matrix:
        return self.codegeneracies[n][i]

    def t(self, n: int) -> Matrix:
        return self.cyclic[n]

    def truncate(self, N: int) -> "ParaCocyclicModule":
        if N > self.N:
            raise ValueError("cannot extend a truncation")
        cof = [list(self.cofaces[n]) if n < N else [] for n in range(N + 1)]
        return ParaCocyclicModule(self.field, self.dims[: N + 1], cof, self.codegeneracies[: N + 1], self.cyclic[: N + 1], self.name)

    def __repr__(self):
        return "ParaCocyclicModule(%s, dims=%s)" % (self.name or "?", self.dims)


@dataclass
class GradedMap:
    """Degreewise matrices f_n : X_n -> Y_n."""

    matrices: list
    name: str = ""
    meta: dict = field(default_factory=dict)

    def __getitem__(self, n: int) -> Matrix:
        return self.matrices[n]

    def __len__(self):
        return len(self.matrices)

    def compose(self, other: "GradedMap") -> "GradedMap":
        """self o other."""
        return GradedMap([a @ b for a, b in zip(self.matrices, other.matrices)])

    def is_invertible(self) -> bool:
        return all(m.rows == m.cols and rank(m) == m.rows for m in self.matrices)

    def inverse(self) -> "GradedMap":
        return GradedMap([inverse(m) for m in self.matrices], name=self.name + "^-1")


def constant_cyclic(field: Field, N: int) -> ParaCyclicModule:
    one = Matrix.identity(field, 1)
    return ParaCyclicModule(
        field,
        [1] * (N + 1),
        [[one] * (n + 1) if n else [] for n in range(N + 1)],
        [[one] * (n + 1) if n < N else [] for n in range(N + 1)],
        [one] * (N + 1),
        name="constant",
    )


def constant_cocyclic(field: Field, N: int) -> ParaCocyclicModule:
    one = Matrix.identity(field, 1)
    return ParaCocyclicModule(
        field,
        [1] * (N + 1),
        [[one] * (n + 2) if n < N else [] for n in range(N + 1)],
        [[one] * n for n in range(N + 1)],
        [one] * (N + 1),
        name="constant",
    )


# relation checking


def cyclic_order(t: Matrix, bound: int):
    """Least k <= bound with t^k = id, or None."""
    p = t
    for k in range(1, bound + 1):
        if p.is_identity():
            return k
        p = t @ p
    return None


def _cyclic_meta(X, rep: Report, require_cyclic: bool):
    orders = {}
    cyc = True
    for n in range(X.N + 1):
        t = X.cyclic[n]
        rep.add("cyclic-invertible", rank(t) == t.rows, degree=n)
        full = t.power(n + 1).is_identity()
        cyc = cyc and full
        k = cyclic_order(t, n + 1)
        orders[n] = k if k is not None else "paracyclic only"
        if require_cyclic:
            rep.add("cyclic-order", full, degree=n)
    rep.meta["cyclic"] = cyc
    rep.meta["orders"] = orders


def check_relations(X, require_cyclic: bool = False) -> Report:
    """Every (co)simplicial identity and every cyclic relation, degree by degree.

    The report always records, under ``meta['cyclic']``, whether t^{n+1} = id
    holds in every degree; ``require_cyclic`` also turns that into checks.
    """
    if isinstance(X, ParaCyclicModule):
        return _check_paracyclic(X, require_cyclic)
    if isinstance(X, ParaCocyclicModule):
        return _check_paracocyclic(X, require_cyclic)
    raise TypeError("expected a (para)(co)cyclic module")


def _check_paracyclic(X: ParaCyclicModule, require_cyclic: bool) -> Report:
    N = X.N
    d, s, tau = X.face, X.degeneracy, X.tau
    rep = Report("relations", meta={"kind": X.kind, "N": N, "field": X.field.tag, "dims": X.dims, "name": X.name})
    for n in range(2, N + 1):
        for j in range(1, n + 1):
            for i in range(j):
                rep.add("face-face", d(n - 1, i) @ d(n, j) == d(n - 1, j - 1) @ d(n, i), degree=n, index=i * (n + 1) + j)
    for n in range(0, N - 1):
        for j in range(n + 1):
            for i in range(j + 1):
                rep.add("degen-degen", s(n + 1, i) @ s(n, j) == s(n + 1, j + 1) @ s(n, i), degree=n, index=i * (n + 1) + j)
    for n in range(0, N):
        ident = Matrix.identity(X.field, X.dims[n])
        for j in range(n + 1):
            for i in range(n + 2):
                lhs = d(n + 1, i) @ s(n, j)
                if i < j:
                    ok = lhs == s(n - 1, j - 1) @ d(n, i)
                elif i in (j, j + 1):
                    ok = lhs == ident
                else:
                    ok = lhs == s(n - 1, j) @ d(n, i - 1)
                rep.add("face-degen", ok, degree=n, index=i * (n + 1) + j)
    for n in range(1, N + 1):
        for i in range(1, n + 1):
            rep.add("face-cyclic", d(n, i) @ tau(n) == tau(n - 1) @ d(n, i - 1), degree=n, index=i)
        rep.add("face0-cyclic", d(n, 0) @ tau(n) == d(n, n), degree=n, index=0)
    for n in range(0, N):
        for i in range(1, n + 1):
            rep.add("degen-cyclic", s(n, i) @ tau(n) == tau(n + 1) @ s(n, i - 1), degree=n, index=i)
        rep.add("degen0-cyclic", s(n, 0) @ tau(n) == tau(n + 1) @ tau(n + 1) @ s(n, n), degree=n, index=0)
    _cyclic_meta(X, rep, require_cyclic)
    return rep


def _check_paracocyclic(X: ParaCocyclicModule, require_cyclic: bool) -> Report:
    N = X.N
    d, s, t = X.coface, X.codegeneracy, X.t
    rep = Report("relations", meta={"kind": X.kind, "N": N, "field": X.field.tag, "dims": X.dims, "name": X.name})
    for n in range(0, N - 1):
        for j in range(1, n + 3):
            for i in range(j):
                rep.add("coface-coface", d(n + 1, j) @ d(n, i) == d(n + 1, i) @ d(n, j - 1), degree=n, index=i * (n + 3) + j)
    for n in range(2, N + 1):
        for j in range(n - 1):
            for i in range(j + 1):
                rep.add("codegen-codegen", s(n - 1, j) @ s(n, i) == s(n - 1, i) @ s(n, j + 1), degree=n, index=i * n + j)
    for n in range(0, N):
        ident = Matrix.identity(X.field, X.dims[n])
        for j in range(n + 1):
            for i in range(n + 2):
                lhs = s(n + 1, j) @ d(n, i)
                if i < j:
                    ok = lhs == d(n - 1, i) @ s(n, j - 1)
                elif i in (j, j + 1):
                    ok = lhs == ident
                else:
                    ok = lhs == d(n - 1, i - 1) @ s(n, j)
                rep.add("codegen-coface", ok, degree=n, index=i * (n + 1) + j)
    for n in range(0, N):
        for i in range(1, n + 2):
            rep.add("coface-cyclic", t(n + 1) @ d(n, i) == d(n, i - 1) @ t(n), degree=n, index=i)
        rep.add("coface0-cyclic", t(n + 1) @ d(n, 0) == d(n, n + 1), degree=n, index=0)
    for n in range(1, N + 1):
        for i in range(1, n):
            rep.add("codegen-cyclic", t(n - 1) @ s(n, i) == s(n, i - 1) @ t(n), degree=n, index=i)
        rep.add("codegen0-cyclic", t(n - 1) @ s(n, 0) == s(n, n - 1) @ t(n) @ t(n), degree=n, index=0)
    _cyclic_meta(X, rep, require_cyclic)
    return rep


def is_cyclic(X) -> bool:
    return all(X.cyclic[n].power(n + 1).is_identity() for n in range(X.N + 1))


# duality functors


def hat_dual(X: ParaCocyclicModule) -> ParaCyclicModule:
    """Paracocyclic -> paracyclic: delta_i = s_{i-1}, delta_0 = s_{n-1} t_n, sigma_i = d_i, tau = t^-1."""
    N = X.N
    faces = [[]]
    for n in range(1, N + 1):
        faces.append([X.codegeneracy(n, n - 1) @ X.t(n)] + [X.codegeneracy(n, i - 1) for i in range(1, n + 1)])
    degs = [[X.coface(n, i) for i in range(n + 1)] if n < N else [] for n in range(N + 1)]
    taus = [inverse(X.t(n)) for n in range(N + 1)]
    name = "hat(%s)" % X.name if X.name else None
    return ParaCyclicModule(X.field, X.dims, faces, degs, taus, name=name, labels=X.labels)


def check_dual(X: ParaCyclicModule) -> ParaCocyclicModule:
    """Paracyclic -> paracocyclic: d_i = sigma_{i-1}, d_0 = tau_{n+1} sigma_n, s_i = delta_i, t = tau^-1."""
    N = X.N
    cof = []
    for n in range(N + 1):
        if n < N:
            cof.append([X.tau(n + 1) @ X.degeneracy(n, n)] + [X.degeneracy(n, i - 1) for i in range(1, n + 2)])
        else:
            cof.append([])
    codeg = [[X.face(n, i) for i in range(n)] for n in range(N + 1)]
    ts = [inverse(X.tau(n)) for n in range(N + 1)]
    name = "check(%s)" % X.name if X.name else None
    return ParaCocyclicModule(X.field, X.dims, cof, codeg, ts, name=name, labels=X.labels)


def transpose_module(X):
    """Hom(-, k) of a module: transposes every operator, swapping the two kinds."""
    N = X.N
    if isinstance(X, ParaCyclicModule):
        cof = [[X.face(n + 1, i).T for i in range(n + 2)] if n < N else [] for n in range(N + 1)]
        codeg = [[X.degeneracy(n - 1, i).T for i in range(n)] for n in range(N + 1)]
        return ParaCocyclicModule(X.field, X.dims, cof, codeg, [t.T for t in X.cyclic], name="Hom(%s)" % X.name)
    faces = [[X.coface(n - 1, i).T for i in range(n + 1)] if n else [] for n in range(N + 1)]
    degs = [[X.codegeneracy(n + 1, i).T for i in range(n + 1)] if n < N else [] for n in range(N + 1)]
    return ParaCyclicModule(X.field, X.dims, faces, degs, [t.T for t in X.cyclic], name="Hom(%s)" % X.name)


# morphisms


def verify_morphism(f: GradedMap, X, Y) -> Report:
    """f commutes with every structure operator in every degree both modules carry."""
    if type(X) is not type(Y):
        raise ShapeMismatch("source and target must be of the same kind")
    N = min(X.N, Y.N)
    rep = Report("morphism", meta={"kind": X.kind, "N": N, "name": f.name})
    top = len(f) - 1
    for n in range(len(f)):
        if n <= N:
            _check_shape(f[n], Y.dims[n], X.dims[n], "graded map in degree %d" % n)
    skipped = []
    if isinstance(X, ParaCyclicModule):
        for n in range(N + 1):
            if n > top:
                skipped.append(n)
                continue
            if n >= 1 and n - 1 <= top:
                for i in range(n + 1):
                    rep.add("face", f[n - 1] @ X.face(n, i) == Y.face(n, i) @ f[n], degree=n, index=i)
            if n < N:
                if n + 1 <= top:
                    for i in range(n + 1):
                        rep.add("degeneracy", f[n + 1] @ X.degeneracy(n, i) == Y.degeneracy(n, i) @ f[n], degree=n, index=i)
                else:
                    skipped.append(n)
            rep.add("cyclic", f[n] @ X.tau(n) == Y.tau(n) @ f[n], degree=n)
    else:
        for n in range(N + 1):
            if n > top:
                skipped.append(n)
                continue
            if n < N:
                if n + 1 <= top:
                    for i in range(n + 2):
                        rep.add("coface", f[n + 1] @ X.coface(n, i) == Y.coface(n, i) @ f[n], degree=n, index=i)
                else:
                    skipped.append(n)
            for i in range(n):
                rep.add("codegeneracy", f[n - 1] @ X.codegeneracy(n, i) == Y.codegeneracy(n, i) @ f[n], degree=n, index=i)
            rep.add("cyclic", f[n] @ X.t(n) == Y.t(n) @ f[n], degree=n)
    rep.meta["out_of_truncation"] = skipped
    return rep


def compare_modules(X, Y, upto: int | None = None) -> Report:
    """Matrix-for-matrix equality of two modules of the same kind."""
    if type(X) is not type(Y):
        raise ShapeMismatch("modules of different kinds")
    N = min(X.N, Y.N) if upto is None else upto
    rep = Report("module-equality", meta={"N": N})
    for n in range(N + 1):
        rep.add("dims", X.dims[n] == Y.dims[n], degree=n)
        if X.dims[n] != Y.dims[n]:
            continue
        if isinstance(X, ParaCyclicModule):
            pairs = [("face", X.faces[n], Y.faces[n]), ("cyclic", [X.tau(n)], [Y.tau(n)])]
            if n < N:
                pairs.append(("degeneracy", X.degeneracies[n], Y.degeneracies[n]))
        else:
            pairs = [("codegeneracy", X.codegeneracies[n], Y.codegeneracies[n]), ("cyclic", [X.t(n)], [Y.t(n)])]
            if n < N:
                pairs.append(("coface", X.cofaces[n], Y.cofaces[n]))
        for nm, xs, ys in pairs:
            for i, (a, b) in enumerate(zip(xs, ys)):
                rep.add(nm, a == b, degree=n, index=i)
    return rep


# sub- and quotient modules


def restrict(X, inclusions: list, name=None):
    """Submodule spanned by ``inclusions[n]`` in each degree (raises NotPreserved)."""
    subs = [Subspace(inc) for inc in inclusions]
    N = X.N

    def res(op, src, tgt):
        return subs[tgt].coordinates(op @ subs[src].inclusion)

    dims = [s.dim for s in subs]
    if isinstance(X, ParaCyclicModule):
        faces = [[res(X.face(n, i), n, n - 1) for i in range(n + 1)] if n else [] for n in range(N + 1)]
        degs = [[res(X.degeneracy(n, i), n, n + 1) for i in range(n + 1)] if n < N else [] for n in range(N + 1)]
        taus = [res(X.tau(n), n, n) for n in range(N + 1)]
        return ParaCyclicModule(X.field, dims, faces, degs, taus, name=name)
    cof = [[res(X.coface(n, i), n, n + 1) for i in range(n + 2)] if n < N else [] for n in range(N + 1)]
    codeg = [[res(X.codegeneracy(n, i), n, n - 1) for i in range(n)] for n in range(N + 1)]
    ts = [res(X.t(n), n, n) for n in range(N + 1)]
    return ParaCocyclicModule(X.field, dims, cof, codeg, ts, name=name)


def quotient(X, quotients: list, name=None):
    """Quotient module by the relation spans of ``quotients[n]`` (raises NotWellDefined)."""
    N = X.N
    q = quotients

    def ind(op, src, tgt):
        return q[tgt].induced(op, q[src])

    dims = [qq.dim for qq in q]
    if isinstance(X, ParaCyclicModule):
        faces = [[ind(X.face(n, i), n, n - 1) for i in range(n + 1)] if n else [] for n in range(N + 1)]
        degs = [[ind(X.degeneracy(n, i), n, n + 1) for i in range(n + 1)] if n < N else [] for n in range(N + 1)]
        taus = [ind(X.tau(n), n, n) for n in range(N + 1)]
        return ParaCyclicModule(X.field, dims, faces, degs, taus, name=name)
    cof = [[ind(X.coface(n, i), n, n + 1) for i in range(n + 2)] if n < N else [] for n in range(N + 1)]
    codeg = [[ind(X.codegeneracy(n, i), n, n - 1) for i in range(n)] for n in range(N + 1)]
    ts = [ind(X.t(n), n, n) for n in range(N + 1)]
    return ParaCocyclicModule(X.field, dims, cof, codeg, ts, name=name)


def transport(X, forward: GradedMap, backward: GradedMap, name=None):
    """The structure of X carried along degreewise isomorphisms f_n (with inverses g_n):
    every operator op becomes f o op o g."""
    f, g = forward, backward
    N = X.N
    dims = [f[n].rows for n in range(N + 1)]
    if isinstance(X, ParaCyclicModule):
        faces = [[f[n - 1] @ X.face(n, i) @ g[n] for i in range(n + 1)] if n else [] for n in range(N + 1)]
        degs = [[f[n + 1] @ X.degeneracy(n, i) @ g[n] for i in range(n + 1)] if n < N else [] for n in range(N + 1)]
        taus = [f[n] @ X.tau(n) @ g[n] for n in range(N + 1)]
        return ParaCyclicModule(X.field, dims, faces, degs, taus, name=name)
    cof = [[f[n + 1] @ X.coface(n, i) @ g[n] for i in range(n + 2)] if n < N else [] for n in range(N + 1)]
    codeg = [[f[n - 1] @ X.codegeneracy(n, i) @ g[n] for i in range(n)] for n in range(N + 1)]
    ts = [f[n] @ X.t(n) @ g[n] for n in range(N + 1)]
    return ParaCocyclicModule(X.field, dims, cof, codeg, ts, name=name)


__all__ = [
    "ParaCyclicModule", "ParaCocyclicModule", "GradedMap", "constant_cyclic", "constant_cocyclic",
    "check_relations", "is_cyclic", "cyclic_order", "hat_dual", "check_dual", "transpose_module",
    "verify_morphism", "compare_modules", "restrict", "quotient", "transport", "Quotient",
]
