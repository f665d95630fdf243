"""Hochschild and cyclic (co)homology dimensions of truncated (co)cyclic modules.

Cyclic homology is computed from the total complex of the standard
first-quadrant bicomplex: even columns carry b, odd columns -b', and the rows
alternate 1 - lambda (odd to even) and the norm N (even to odd), where
lambda_n = (-1)^n tau_n.  The Connes complex X_n / im(1 - lambda) gives an
independent second pipeline in characteristic zero.

Cohomology of a cocyclic module is the homology of its Hom-dual, which over a
field of finite dimension has the same ranks as the cochain complex itself.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cyclic import ParaCocyclicModule, ParaCyclicModule, is_cyclic, transpose_module
from .errors import NotAComplex, NotCyclic
from .exactfield import Matrix, block_matrix, quotient_data, rank
from .report import Report


@dataclass
class HomologyReport:
    kind: str  # "hochschild" | "cyclic"
    direction: str  # "homology" | "cohomology"
    dims: dict
    guaranteed: int
    N: int
    field: str
    method: str = "bicomplex"
    checks: Report = field(default_factory=lambda: Report("complex"))

    def as_list(self) -> list:
        return [self.dims[n] for n in sorted(self.dims)]

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "direction": self.direction,
            "method": self.method,
            "N": self.N,
            "field": self.field,
            "dims": [{"degree": n, "dim": self.dims[n], "guaranteed": n <= self.guaranteed} for n in sorted(self.dims)],
            "truncation_note": "degrees <= %d are exact; higher degrees would need cells beyond N" % self.guaranteed,
            "checks": self.checks.to_dict(),
        }

    def table(self) -> str:
        sym = {"hochschild": "HH", "cyclic": "HC"}[self.kind]
        pos = "_" if self.direction == "homology" else "^"
        lines = ["degree  %s%sn  exact" % (sym, pos)]
        for n in sorted(self.dims):
            lines.append("%6d  %5d  %s" % (n, self.dims[n], "yes" if n <= self.guaranteed else "no"))
        return "\n".join(lines)


def _as_cyclic(X):
    if isinstance(X, ParaCyclicModule):
        return X, "homology"
    if isinstance(X, ParaCocyclicModule):
        return transpose_module(X), "cohomology"
    raise TypeError("expected a (para)(co)cyclic module")


def _alternating(F, maps, rows, cols) -> Matrix:
    out = Matrix.zeros(F, rows, cols)
    for i, m in enumerate(maps):
        out = out + m if i % 2 == 0 else out - m
    return out


def hochschild_boundaries(X: ParaCyclicModule) -> dict:
    """b_n : X_n -> X_{n-1} for 1 <= n <= N."""
    return {n: _alternating(X.field, X.faces[n], X.dims[n - 1], X.dims[n]) for n in range(1, X.N + 1)}


def prime_boundaries(X: ParaCyclicModule) -> dict:
    """b'_n, the alternating sum omitting the last face."""
    return {n: _alternating(X.field, X.faces[n][:-1], X.dims[n - 1], X.dims[n]) for n in range(1, X.N + 1)}


def _bound(X, up_to):
    top = X.N - 1
    if up_to is None:
        return top
    if up_to > top:
        raise ValueError("degree %d needs truncation N >= %d (module has N = %d)" % (up_to, up_to + 1, X.N))
    return up_to


def _homology_dims(dims, diffs, up_to):
    """diffs[n] : C_n -> C_{n-1}; missing entries are zero maps."""
    ranks = {n: rank(m) for n, m in diffs.items()}
    return {n: dims[n] - ranks.get(n, 0) - ranks.get(n + 1, 0) for n in range(up_to + 1)}


def hochschild_dims(X, up_to: int | None = None) -> HomologyReport:
    Y, direction = _as_cyclic(X)
    up_to = _bound(Y, up_to)
    b = hochschild_boundaries(Y)
    rep = Report("hochschild-complex")
    for n in range(2, Y.N + 1):
        ok = (b[n - 1] @ b[n]).is_zero()
        rep.add("b-squared", ok, degree=n)
        if not ok:
            raise NotAComplex("b o b != 0 in degree %d" % n)
    dims = _homology_dims(Y.dims, {n: b[n] for n in range(1, up_to + 2)}, up_to)
    return HomologyReport("hochschild", direction, dims, up_to, Y.N, Y.field.tag, "b-complex", rep)


def lambdas(X: ParaCyclicModule) -> dict:
    return {n: X.tau(n).scale(-1) if n % 2 else X.tau(n) for n in range(X.N + 1)}


def norms(X: ParaCyclicModule) -> dict:
    out = {}
    for n, lam in lambdas(X).items():
        acc = Matrix.identity(X.field, X.dims[n])
        p = acc
        for _ in range(n):
            p = lam @ p
            acc = acc + p
        out[n] = acc
    return out


def _require_cyclic(X: ParaCyclicModule):
    if not is_cyclic(X):
        raise NotCyclic("tau_n^(n+1) != id: cyclic homology is undefined for a merely paracyclic module")


def bicomplex_checks(X: ParaCyclicModule) -> Report:
    F = X.field
    b, bp, lam, nm = hochschild_boundaries(X), prime_boundaries(X), lambdas(X), norms(X)
    rep = Report("bicomplex")
    for n in range(1, X.N + 1):
        one_minus = Matrix.identity(F, X.dims[n]) - lam[n]
        one_minus_low = Matrix.identity(F, X.dims[n - 1]) - lam[n - 1]
        rep.add("b(1-lambda)=(1-lambda)b'", b[n] @ one_minus == one_minus_low @ bp[n], degree=n)
        rep.add("b'N=Nb", bp[n] @ nm[n] == nm[n - 1] @ b[n], degree=n)
        if n >= 2:
            rep.add("b-squared", (b[n - 1] @ b[n]).is_zero(), degree=n)
            rep.add("bprime-squared", (bp[n - 1] @ bp[n]).is_zero(), degree=n)
    for n in range(X.N + 1):
        one_minus = Matrix.identity(F, X.dims[n]) - lam[n]
        rep.add("(1-lambda)N=0", (one_minus @ nm[n]).is_zero(), degree=n)
        rep.add("N(1-lambda)=0", (nm[n] @ one_minus).is_zero(), degree=n)
    return rep


def total_differentials(X: ParaCyclicModule, top: int) -> dict:
    """D_n : Tot_n -> Tot_{n-1} for 1 <= n <= top; Tot_n = sum over p + q = n of X_q,
    blocks ordered by column p = 0..n."""
    F = X.field
    b, bp, lam, nm = hochschild_boundaries(X), prime_boundaries(X), lambdas(X), norms(X)
    out = {}
    for n in range(1, top + 1):
        src = [X.dims[n - p] for p in range(n + 1)]
        tgt = [X.dims[n - 1 - p] for p in range(n)]
        blocks = {}
        for p in range(n + 1):
            q = n - p
            if q >= 1:
                blocks[(p, p)] = b[q] if p % 2 == 0 else -bp[q]
            if p >= 1:
                blocks[(p - 1, p)] = Matrix.identity(F, X.dims[q]) - lam[q] if p % 2 else nm[q]
        out[n] = block_matrix(F, [[blocks.get((r, c)) for c in range(n + 1)] for r in range(n)], tgt, src)
    return out


def cyclic_dims(X, up_to: int | None = None) -> HomologyReport:
    Y, direction = _as_cyclic(X)
    _require_cyclic(Y)
    up_to = _bound(Y, up_to)
    rep = bicomplex_checks(Y)
    D = total_differentials(Y, up_to + 1)
    for n in range(2, up_to + 2):
        rep.add("total-D-squared", (D[n - 1] @ D[n]).is_zero(), degree=n)
    if not rep.ok:
        raise NotAComplex("bicomplex identities fail: %s" % sorted({(c.name, c.degree) for c in rep.failures()}))
    tot = {n: sum(Y.dims[: n + 1]) for n in range(up_to + 2)}
    dims = _homology_dims(tot, D, up_to)
    return HomologyReport("cyclic", direction, dims, up_to, Y.N, Y.field.tag, "bicomplex", rep)


def connes_dims(X, up_to: int | None = None) -> HomologyReport:
    """Second pipeline: homology of X_n / im(1 - lambda) with the induced b.

    Valid in characteristic 0, or characteristic p > up_to + 1.
    """
    Y, direction = _as_cyclic(X)
    _require_cyclic(Y)
    up_to = _bound(Y, up_to)
    p = Y.field.characteristic
    if p and p <= up_to + 1:
        raise ValueError("the Connes complex needs characteristic 0 or > %d" % (up_to + 1))
    F = Y.field
    lam, b = lambdas(Y), hochschild_boundaries(Y)
    qs = {n: quotient_data(Matrix.identity(F, Y.dims[n]) - lam[n], Y.dims[n]) for n in range(up_to + 2)}
    induced = {n: qs[n - 1].induced(b[n], qs[n]) for n in range(1, up_to + 2)}
    rep = Report("connes-complex")
    for n in range(2, up_to + 2):
        rep.add("b-squared", (induced[n - 1] @ induced[n]).is_zero(), degree=n)
    dims = _homology_dims({n: q.dim for n, q in qs.items()}, induced, up_to)
    return HomologyReport("cyclic", direction, dims, up_to, Y.N, Y.field.tag, "connes-quotient", rep)


def cohomology_variants(X: ParaCocyclicModule, up_to: int | None = None) -> dict:
    """HH^* and HC^* of a cocyclic module (HC only when it is genuinely cocyclic)."""
    if not isinstance(X, ParaCocyclicModule):
        raise TypeError("expected a (para)cocyclic module")
    out = {"hochschild": hochschild_dims(X, up_to)}
    if is_cyclic(X):
        out["cyclic"] = cyclic_dims(X, up_to)
    return out


def bprime_exactness(X, up_to: int | None = None) -> dict:
    """Degreewise dim ker b' - dim im b' (all zero when b' is acyclic); diagnostic only."""
    Y, _ = _as_cyclic(X)
    up_to = _bound(Y, up_to)
    bp = prime_boundaries(Y)
    return _homology_dims(Y.dims, {n: bp[n] for n in range(1, up_to + 2)}, up_to)


__all__ = [
    "HomologyReport", "hochschild_dims", "cyclic_dims", "connes_dims", "cohomology_variants",
    "bprime_exactness", "hochschild_boundaries", "prime_boundaries", "lambdas", "norms",
    "bicomplex_checks", "total_differentials",
]
